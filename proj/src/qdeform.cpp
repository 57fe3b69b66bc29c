#include "starrep/qdeform.hpp"
#include "starrep/gram.hpp"
#include "starrep/rewrite.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace starrep {

namespace {

bool same_relations(const RewriteSystem& system, const std::vector<Polynomial>& expected) {
  if (system.size() != expected.size()) return false;
  for (auto& e : expected) {
    Polynomial m = e.monic(system.order());
    const auto& rels = system.relations();
    if (std::find(rels.begin(), rels.end(), m) == rels.end()) return false;
  }
  return true;
}

} // namespace

QDeformData match_qdeform(const RewriteSystem& system) {
  if (system.alphabet().size() == 2) {
    for (std::uint32_t ab : {0u, 1u}) {
      const Symbol a{ab, false}, x{1 - ab, false};
      const Word as_a{a.star(), a}, a_as{a, a.star()}, x_xs{x, x.star()};
      // q is read off the relation whose support is {a* a, a a*}
      for (auto& r : system.relations()) {
        if (r.size() != 2 || !r.contains(as_a) || !r.contains(a_as)) continue;
        const Scalar ratio = -(r.coefficient(a_as) / r.coefficient(as_a));
        if (!ratio.is_real()) continue;
        const Rational q = ratio.re();
        std::vector<Polynomial> expected{
            Polynomial(as_a) - Polynomial(Scalar(q), a_as),
            Polynomial(x_xs) + Polynomial(a_as) - Polynomial(Scalar(1))};
        if (same_relations(system, expected)) return {a, x, q};
      }
    }
  }
  throw std::invalid_argument("F is defined only for the q-deformed preset {a* a - q a a*, x x* + a a* - 1}");
}

Scalar qdeform_F(const Polynomial& y, const RewriteSystem& system) {
  match_qdeform(system);
  Polynomial r = normal_form(y, system);
  if (r.is_zero()) return Scalar(0);
  std::size_t t = std::numeric_limits<std::size_t>::max();
  for (auto& [w, c] : r.terms()) t = std::min(t, w.length());
  Scalar out;
  for (auto& [w, c] : r.terms())
    if (w.length() == t && half_of_square(w)) out += c;
  return out;
}

Rational qdeform_F_prediction(const Polynomial& z, const RewriteSystem& system) {
  const QDeformData d = match_qdeform(system);
  Polynomial r = normal_form(z, system);
  auto stem = [&](const Word& w) {
    std::size_t n = w.length();
    while (n > 0 && w[n - 1] == d.x) --n;
    return n;
  };
  std::size_t t = std::numeric_limits<std::size_t>::max();
  for (auto& [w, c] : r.terms()) t = std::min(t, stem(w));
  Rational out = 0;
  for (auto& [w, c] : r.terms()) {
    if (stem(w) != t) continue;
    unsigned long m = 0;
    while (m < t && w[t - 1 - m] == d.a.star()) ++m;
    Rational weight = 1;
    for (unsigned long k = 0; k < m * m; ++k) weight *= d.q;
    out += weight * c.norm2();
  }
  return out;
}

} // namespace starrep
