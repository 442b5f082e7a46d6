#pragma once

#include <vector>

namespace mbqct {

// Determinant of a dense row-major n x n matrix via LU with partial
// pivoting.  The matrix is consumed.
double determinant(std::vector<double> a, int n);

}  // namespace mbqct
