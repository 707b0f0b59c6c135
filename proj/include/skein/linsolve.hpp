// Exact sparse Gauss-Jordan elimination over Q(t). Deterministic: columns
// are processed in order and pivots picked by fewest-nonzeros (ties by row
// index); free variables are set to zero.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

struct LinearSystem {
    int ncols = 0;
    std::vector<std::map<int, RatFunc>> rows;  // column -> coefficient
    std::vector<RatFunc> rhs;

    void add_row(std::map<int, RatFunc> lhs, RatFunc b) {
        rows.push_back(std::move(lhs));
        rhs.push_back(std::move(b));
    }
};

struct LinearSolution {
    std::vector<RatFunc> values;  // one per column
    bool unique = false;          // no free variables
};

/// Empty result means the system is inconsistent.
std::optional<LinearSolution> solve_linear(LinearSystem sys);

}  // namespace skein
