#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcc/integer.hpp"
#include "tcc/laurent.hpp"

namespace tcc {

/// d^m t(mu) in Z wr Z, realised by the matrix [[l^m, l^m mu], [0, 1]].
struct WreathElement {
  Integer m;
  LaurentPoly mu;

  static WreathElement identity() { return {}; }
  static WreathElement d(const Integer& m = 1) { return {m, {}}; }
  static WreathElement t(LaurentPoly mu) { return {0, std::move(mu)}; }

  bool is_identity() const { return m == 0 && mu.is_zero(); }
  /// "d^m t(mu)"
  std::string to_string() const;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// d^m1 t(mu1) d^m2 t(mu2) = d^(m1+m2) t(l^-m2 mu1 + mu2)
WreathElement multiply(const WreathElement& u, const WreathElement& v);
WreathElement inverse(const WreathElement& u);
/// Closed form [(l, nu), (m, mu)] = t(mu (1 - l^-l) - nu (1 - l^-m)).
WreathElement wreath_commutator(const WreathElement& u, const WreathElement& h);
/// u^-1 h^-1 u h by multiplication.
WreathElement multiply_commutator(const WreathElement& u, const WreathElement& h);

/// 1 - l^-k
LaurentPoly one_minus_shift(const Integer& k);

struct WreathMembership {
  enum class Kind { member, non_member, trivial_twist };

  Kind kind = Kind::non_member;
  /// z = d^l t(nu) with [z, h] = t(target), when a member.
  std::optional<WreathElement> witness;

  bool is_member() const { return kind == Kind::member || (kind == Kind::trivial_twist && witness); }
};

/// Decides t(target) in [e]_h = { [z, h] } exactly. For m = 0 the target
/// must be mu (1 - l^-l); for m != 0 it suffices to try l modulo |m| and
/// divide by 1 - l^-m, since (l, nu) and (l + m, nu + mu l^-l) give the same
/// commutator. h = identity is reported as the trivial_twist variant.
WreathMembership unit_class_membership(const WreathElement& h, const LaurentPoly& target);

/// True when m != 0 and [e]_h is the whole ideal generated by 1 - l^-m,
/// which happens exactly when every mu (1 - l^-r) lies in that ideal.
bool unit_class_is_ideal(const WreathElement& h);

struct WitnessSearch {
  int l_bound = 4;
  int nu_degree = 3;
  int nu_coefficient = 1;
};

struct NonclosureWitness {
  WreathElement first, second;  // members of [e]_h
  WreathElement product;        // not a member
};

/// Two members of [e]_h whose product is not in [e]_h. For m = 0 this is the
/// pair with l = 1 twice; otherwise members built from |l| <= l_bound and
/// nu = 0 or c l^k (|k| <= nu_degree, 0 < |c| <= nu_coefficient) are paired.
/// Throws std::invalid_argument for h = identity.
std::optional<NonclosureWitness> nonclosure_witness(const WreathElement& h,
                                                    const WitnessSearch& search = {});

}  // namespace tcc
