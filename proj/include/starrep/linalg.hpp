#pragma once

#include "starrep/scalar.hpp"

#include <vector>

namespace starrep {

using Matrix = std::vector<std::vector<Scalar>>;

/// Leading principal minors Δ_1..Δ_n of a square matrix, by fraction-free
/// (Bareiss) elimination. Pivoting is deliberately absent: a zero pivot
/// means the corresponding minor is zero, and all later minors are reported
/// by a fresh elimination of the leading block.
std::vector<Scalar> leading_minors(const Matrix& m);

/// det(m) by Bareiss elimination with row pivoting.
Scalar determinant(Matrix m);

/// Conjugate transpose equals the matrix.
bool is_hermitian(const Matrix& m);

} // namespace starrep
