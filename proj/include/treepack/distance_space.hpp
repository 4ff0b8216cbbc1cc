#ifndef TREEPACK_DISTANCE_SPACE_HPP
#define TREEPACK_DISTANCE_SPACE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "treepack/errors.hpp"

namespace treepack {

using PointId = int;
using Distance = int;

/// A finite point set with a symmetric distance function into a finite
/// alphabet of distance labels. Two flavours: the Euclidean space over a
/// prime field F_q^dim, and an arbitrary symmetric lookup table.
///
/// Spaces are immutable after construction; everything downstream works
/// on point-id subsets of a shared space.
class DistanceSpace {
public:
    enum class Kind { Field, Table };

    // All q^dim points of F_q^dim with d(x,y) = sum (x_i - y_i)^2 mod q.
    // q must be prime and q^dim must stay under point_cap.
    static DistanceSpace finite_field(int q, int dim,
                                      long long point_cap = 1'000'000);

    // Table-backed space; the matrix must be square and symmetric.
    // The alphabet is the set of off-diagonal values.
    static DistanceSpace from_table(std::vector<std::vector<Distance>> matrix);

    Kind kind() const { return kind_; }
    int size() const { return size_; }
    int q() const { return q_; }
    int dim() const { return dim_; }

    Distance distance(PointId a, PointId b) const;

    // Sorted, deduplicated. For field spaces this is {0,...,q-1}.
    const std::vector<Distance>& alphabet() const { return alphabet_; }
    bool in_alphabet(Distance t) const;

    // Field spaces: coordinates of a point, lexicographic id order
    // (first coordinate most significant).
    std::vector<int> coords(PointId p) const;
    PointId point_at(std::span<const int> coords) const;

    // All p in candidates with p != center and d(center, p) = t,
    // ascending by id.
    std::vector<PointId> neighbors_at(std::span<const PointId> candidates,
                                      PointId center, Distance t) const;

    std::vector<PointId> all_points() const;

    void check_point(PointId p) const;

private:
    DistanceSpace() = default;

    Kind kind_ = Kind::Table;
    int size_ = 0;
    int q_ = 0;
    int dim_ = 0;
    std::vector<std::vector<Distance>> matrix_; // table spaces only
    std::vector<Distance> alphabet_;
};

bool is_prime(long long n);

} // namespace treepack

#endif
