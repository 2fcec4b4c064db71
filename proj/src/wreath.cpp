#include "tcc/wreath.hpp"

#include <stdexcept>

namespace tcc {

std::string WreathElement::to_string() const { return "d^" + m.str() + " t(" + mu.to_string() + ")"; }

WreathElement multiply(const WreathElement& u, const WreathElement& v) {
  return {u.m + v.m, shift(u.mu, -v.m) + v.mu};
}

WreathElement inverse(const WreathElement& u) { return {-u.m, -shift(u.mu, u.m)}; }

LaurentPoly one_minus_shift(const Integer& k) {
  return LaurentPoly::constant(1) - LaurentPoly::monomial(1, -k);
}

WreathElement wreath_commutator(const WreathElement& u, const WreathElement& h) {
  return WreathElement::t(h.mu * one_minus_shift(u.m) - u.mu * one_minus_shift(h.m));
}

WreathElement multiply_commutator(const WreathElement& u, const WreathElement& h) {
  return multiply(multiply(inverse(u), inverse(h)), multiply(u, h));
}

WreathMembership unit_class_membership(const WreathElement& h, const LaurentPoly& target) {
  using Kind = WreathMembership::Kind;
  if (h.is_identity()) {
    WreathMembership r{Kind::trivial_twist, std::nullopt};
    if (target.is_zero()) r.witness = WreathElement::identity();
    return r;
  }
  if (target.is_zero()) return {Kind::member, WreathElement::identity()};
  if (h.m == 0) {
    auto q = exact_divide(target, h.mu);
    if (!q || q->terms().size() != 2 || q->coefficient(0) != 1) return {Kind::non_member, std::nullopt};
    for (const auto& [k, c] : q->terms())
      if (k != 0 && c == -1) return {Kind::member, WreathElement{-k, {}}};
    return {Kind::non_member, std::nullopt};
  }
  const Integer period = h.m < 0 ? Integer(-h.m) : h.m;
  const LaurentPoly ideal = one_minus_shift(h.m);
  for (Integer l = 0; l < period; ++l) {
    // target = mu (1 - l^-l) - nu (1 - l^-m)
    auto nu = exact_divide(h.mu * one_minus_shift(l) - target, ideal);
    if (nu) return {Kind::member, WreathElement{l, *nu}};
  }
  return {Kind::non_member, std::nullopt};
}

bool unit_class_is_ideal(const WreathElement& h) {
  if (h.m == 0) return false;
  const Integer period = h.m < 0 ? Integer(-h.m) : h.m;
  const LaurentPoly ideal = one_minus_shift(h.m);
  for (Integer l = 1; l < period; ++l)
    if (!exact_divide(h.mu * one_minus_shift(l), ideal)) return false;
  return true;
}

std::optional<NonclosureWitness> nonclosure_witness(const WreathElement& h, const WitnessSearch& search) {
  if (h.is_identity()) throw std::invalid_argument("nonclosure_witness: h is the identity");
  if (h.m == 0) {
    WreathElement u = wreath_commutator(WreathElement::d(1), h);
    WreathElement p = multiply(u, u);
    if (unit_class_membership(h, p.mu).is_member()) throw std::logic_error("canonical witness failed");
    return NonclosureWitness{u, u, p};
  }
  std::vector<LaurentPoly> nus{LaurentPoly()};
  for (int k = -search.nu_degree; k <= search.nu_degree; ++k)
    for (int c = 1; c <= search.nu_coefficient; ++c) {
      nus.push_back(LaurentPoly::monomial(c, k));
      nus.push_back(LaurentPoly::monomial(-c, k));
    }
  std::vector<WreathElement> members;
  for (int l = -search.l_bound; l <= search.l_bound; ++l)
    for (const auto& nu : nus) {
      WreathElement c = wreath_commutator(WreathElement{l, nu}, h);
      if (!c.is_identity()) members.push_back(std::move(c));
    }
  for (const auto& u : members)
    for (const auto& v : members) {
      WreathElement p = multiply(u, v);
      if (!unit_class_membership(h, p.mu).is_member()) return NonclosureWitness{u, v, p};
    }
  return std::nullopt;
}

}  // namespace tcc
