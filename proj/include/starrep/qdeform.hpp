#pragma once

#include "starrep/system.hpp"

namespace starrep {

/// Parameters recovered from a system equal to {a* a - q a a*, x x* + a a* - 1}.
struct QDeformData {
  Symbol a;
  Symbol x;
  Rational q;
};

/// Throws std::invalid_argument when the system is not the q-deformed preset.
QDeformData match_qdeform(const RewriteSystem& system);

/// F(y): with t the least word length in R_S(y), the sum of the coefficients
/// of the length-t words of shape w w*. F(0) = 0.
Scalar qdeform_F(const Polynomial& y, const RewriteSystem& system);

/// Predicted F(z z*): write R_S(z) = Σ α_i u_i x^{k_i} with u_i not ending in
/// x, let t be the least |u_i|; returns Σ over |u_j| = t of q^{m_j²} |α_j|²,
/// m_j the number of trailing a* letters of u_j (0 for z free of stars).
Rational qdeform_F_prediction(const Polynomial& z, const RewriteSystem& system);

} // namespace starrep
