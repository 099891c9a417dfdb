#ifndef IRSCHED_HUNGARIAN_HPP
#define IRSCHED_HUNGARIAN_HPP

#include <vector>

namespace irsched {

// Exact solution of the n x n assignment problem. value[r * n + c] is the
// profit of pairing row r with column c; returns the column chosen for each
// row, maximizing the total. O(n^3) potentials method.
std::vector<int> solve_assignment_max(const std::vector<double>& value, int n);

} // namespace irsched

#endif
