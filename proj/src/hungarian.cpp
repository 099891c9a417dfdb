#include "irsched/hungarian.hpp"

#include <limits>
#include <stdexcept>

namespace irsched {

std::vector<int> solve_assignment_max(const std::vector<double>& value, int n)
{
    if (n <= 0)
        throw std::invalid_argument("solve_assignment_max: n must be positive");
    if (value.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("solve_assignment_max: value matrix size mismatch");

    // Minimize negated profits with the classic potentials formulation
    // (1-based arrays, column 0 is the virtual root).
    const double kInf = std::numeric_limits<double>::infinity();
    auto cost = [&](int r, int c) { return -value[static_cast<std::size_t>(r - 1) * n + (c - 1)]; };

    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0); // match[c] = row assigned to column c
    std::vector<int> way(n + 1, 0);

    for (int r = 1; r <= n; ++r) {
        match[0] = r;
        int j0 = 0;
        std::vector<double> min_v(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = match[j0];
            double delta = kInf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                const double cur = cost(i0, j) - u[i0] - v[j];
                if (cur < min_v[j]) {
                    min_v[j] = cur;
                    way[j] = j0;
                }
                if (min_v[j] < delta) {
                    delta = min_v[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_v[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> row_to_col(n, -1);
    for (int c = 1; c <= n; ++c)
        if (match[c] != 0)
            row_to_col[match[c] - 1] = c - 1;
    return row_to_col;
}

} // namespace irsched
