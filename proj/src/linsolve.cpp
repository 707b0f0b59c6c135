#include "skein/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

std::optional<LinearSolution> solve_linear(LinearSystem sys) {
    const int n = sys.ncols;
    const size_t m = sys.rows.size();
    std::vector<bool> row_used(m, false);
    std::vector<int> pivot_row_of_col(static_cast<size_t>(n), -1);

    for (int col = 0; col < n; ++col) {
        // pivot: unused row with an entry in this column, fewest nonzeros
        int best = -1;
        size_t best_nnz = 0;
        for (size_t r = 0; r < m; ++r) {
            if (row_used[r]) continue;
            auto it = sys.rows[r].find(col);
            if (it == sys.rows[r].end()) continue;
            size_t nnz = sys.rows[r].size();
            if (best < 0 || nnz < best_nnz) {
                best = static_cast<int>(r);
                best_nnz = nnz;
            }
        }
        if (best < 0) continue;  // free column
        row_used[static_cast<size_t>(best)] = true;
        pivot_row_of_col[static_cast<size_t>(col)] = best;

        auto& prow = sys.rows[static_cast<size_t>(best)];
        RatFunc inv = prow.at(col).inverse();
        for (auto& [c, v] : prow) v *= inv;
        sys.rhs[static_cast<size_t>(best)] *= inv;

        for (size_t r = 0; r < m; ++r) {
            if (r == static_cast<size_t>(best)) continue;
            auto it = sys.rows[r].find(col);
            if (it == sys.rows[r].end()) continue;
            RatFunc f = it->second;
            sys.rows[r].erase(it);
            for (const auto& [c, v] : prow) {
                if (c == col) continue;
                auto [jt, inserted] = sys.rows[r].emplace(c, -f * v);
                if (!inserted) {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) sys.rows[r].erase(jt);
                }
            }
            sys.rhs[r] -= f * sys.rhs[static_cast<size_t>(best)];
        }
    }

    // leftover rows must be 0 = 0
    for (size_t r = 0; r < m; ++r) {
        if (row_used[r]) continue;
        if (!sys.rows[r].empty())
            throw std::logic_error("solve_linear: unreduced leftover row");
        if (!sys.rhs[r].is_zero()) return std::nullopt;
    }

    LinearSolution sol;
    sol.values.assign(static_cast<size_t>(n), RatFunc());
    sol.unique = true;
    for (int col = 0; col < n; ++col) {
        int pr = pivot_row_of_col[static_cast<size_t>(col)];
        if (pr < 0) {
            sol.unique = false;  // free variable, pinned to 0
            continue;
        }
        sol.values[static_cast<size_t>(col)] = sys.rhs[static_cast<size_t>(pr)];
    }
    return sol;
}

}  // namespace skein
