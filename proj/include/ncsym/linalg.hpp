#pragma once

#include <vector>

#include <ncsym/rational.hpp>

namespace ncsym {

// Dense row-major matrix over Q.
using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(int n);
int rank(Matrix m);
Rational determinant(Matrix m);
// Throws internal_error when m is singular.
Matrix inverse(const Matrix& m);
bool is_upper_triangular(const Matrix& m);

} // namespace ncsym
