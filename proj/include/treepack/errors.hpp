#ifndef TREEPACK_ERRORS_HPP
#define TREEPACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treepack {

// Invalid input: bad matrix, non-tree edge list, foreign point, etc.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap was exceeded (space too large, tree too big, node limit).
// Never downgraded to a partial answer.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace treepack

#endif
