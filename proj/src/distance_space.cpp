#include "treepack/distance_space.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace treepack {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

DistanceSpace DistanceSpace::finite_field(int q, int dim, long long point_cap) {
    if (!is_prime(q))
        throw ValidationError("finite_field: q = " + std::to_string(q) +
                              " is not prime (prime fields only)");
    if (dim < 1)
        throw ValidationError("finite_field: dim must be positive");

    long long n = 1;
    for (int i = 0; i < dim; ++i) {
        n *= q;
        if (n > point_cap)
            throw BudgetError("finite_field: q^dim exceeds point cap " +
                              std::to_string(point_cap));
    }

    DistanceSpace s;
    s.kind_ = Kind::Field;
    s.size_ = static_cast<int>(n);
    s.q_ = q;
    s.dim_ = dim;
    s.alphabet_.resize(q);
    for (int t = 0; t < q; ++t) s.alphabet_[t] = t;
    return s;
}

DistanceSpace DistanceSpace::from_table(std::vector<std::vector<Distance>> matrix) {
    const int n = static_cast<int>(matrix.size());
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("from_table: matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (matrix[i][j] != matrix[j][i])
                throw ValidationError(
                    "from_table: matrix is not symmetric at (" +
                    std::to_string(i) + "," + std::to_string(j) +
                    "); a distance function must satisfy d(x,y) = d(y,x)");
    for (const auto& row : matrix)
        for (Distance v : row)
            if (v < 0)
                throw ValidationError("from_table: negative distance label");

    DistanceSpace s;
    s.kind_ = Kind::Table;
    s.size_ = n;
    std::set<Distance> values;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) values.insert(matrix[i][j]);
    s.alphabet_.assign(values.begin(), values.end());
    s.matrix_ = std::move(matrix);
    return s;
}

void DistanceSpace::check_point(PointId p) const {
    if (p < 0 || p >= size_)
        throw ValidationError("point id " + std::to_string(p) +
                              " does not belong to this space");
}

Distance DistanceSpace::distance(PointId a, PointId b) const {
    check_point(a);
    check_point(b);
    if (kind_ == Kind::Table) return matrix_[a][b];

    // decode both ids digit by digit; sum of squared differences mod q
    long long x = a, y = b, acc = 0;
    for (int i = 0; i < dim_; ++i) {
        long long d = (x % q_) - (y % q_);
        acc += d * d;
        x /= q_;
        y /= q_;
    }
    return static_cast<Distance>(acc % q_);
}

bool DistanceSpace::in_alphabet(Distance t) const {
    return std::binary_search(alphabet_.begin(), alphabet_.end(), t);
}

std::vector<int> DistanceSpace::coords(PointId p) const {
    check_point(p);
    if (kind_ != Kind::Field)
        throw ValidationError("coords: not a field space");
    std::vector<int> c(dim_);
    long long x = p;
    for (int i = dim_ - 1; i >= 0; --i) {
        c[i] = static_cast<int>(x % q_);
        x /= q_;
    }
    return c;
}

PointId DistanceSpace::point_at(std::span<const int> coords) const {
    if (kind_ != Kind::Field)
        throw ValidationError("point_at: not a field space");
    if (static_cast<int>(coords.size()) != dim_)
        throw ValidationError("point_at: wrong number of coordinates");
    long long id = 0;
    for (int c : coords) {
        if (c < 0 || c >= q_)
            throw ValidationError("point_at: coordinate out of range");
        id = id * q_ + c;
    }
    return static_cast<PointId>(id);
}

std::vector<PointId> DistanceSpace::neighbors_at(std::span<const PointId> candidates,
                                                 PointId center, Distance t) const {
    check_point(center);
    std::vector<PointId> out;
    for (PointId p : candidates) {
        check_point(p);
        if (p != center && distance(center, p) == t) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<PointId> DistanceSpace::all_points() const {
    std::vector<PointId> pts(size_);
    for (int i = 0; i < size_; ++i) pts[i] = i;
    return pts;
}

} // namespace treepack
