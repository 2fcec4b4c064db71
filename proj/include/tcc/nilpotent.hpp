#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcc/integer.hpp"

namespace tcc {

/// x^a y^b [x,y]^c in the free nilpotent group of rank 2 and class 2.
struct N22Element {
  Integer a, b, c;

  static N22Element identity() { return {}; }
  static N22Element x() { return {1, 0, 0}; }
  static N22Element y() { return {0, 1, 0}; }
  /// [x,y]
  static N22Element commutator_xy() { return {0, 0, 1}; }

  bool is_identity() const { return a == 0 && b == 0 && c == 0; }
  /// Prints every term, e.g. "x^2 y^0 [x,y]^-1".
  std::string to_string() const;
  /// Accepts the printed form with terms in order; missing terms count as 0,
  /// "e" is the identity and a bare generator means exponent 1.
  static N22Element parse(std::string_view text);

  friend bool operator==(const N22Element&, const N22Element&) = default;
};

/// x^a y^b c^C d^D f^F with c = [y,x], d = [[y,x],y], f = [[y,x],x] in the
/// free nilpotent group of rank 2 and class 3.
struct N23Element {
  Integer a, b, c, d, f;

  static N23Element identity() { return {}; }
  static N23Element x() { return {1, 0, 0, 0, 0}; }
  static N23Element y() { return {0, 1, 0, 0, 0}; }

  bool is_identity() const { return a == 0 && b == 0 && c == 0 && d == 0 && f == 0; }
  std::string to_string() const;
  static N23Element parse(std::string_view text);

  friend bool operator==(const N23Element&, const N23Element&) = default;
};

N22Element multiply(const N22Element& u, const N22Element& v);
N22Element inverse(const N22Element& u);
N22Element power(const N22Element& u, const Integer& k);
/// [u,v] = u^-1 v^-1 u v
N22Element commutator(const N22Element& u, const N22Element& v);
bool is_central(const N22Element& u);

N23Element multiply(const N23Element& u, const N23Element& v);
N23Element inverse(const N23Element& u);
N23Element power(const N23Element& u, const Integer& k);
N23Element commutator(const N23Element& u, const N23Element& v);
bool is_central(const N23Element& u);

/// Image of z under the endomorphism x -> x_image, y -> y_image.
N22Element nil_apply(const N22Element& x_image, const N22Element& y_image, const N22Element& z);
N23Element nil_apply(const N23Element& x_image, const N23Element& y_image, const N23Element& z);

/// Endomorphism of N_{2,2} or N_{2,3} given by the images of x and y. Every
/// choice of images extends, the group being free in its variety.
template <class E>
struct NilMap {
  E x_image;
  E y_image;

  static NilMap identity() { return {E::x(), E::y()}; }

  E operator()(const E& z) const { return nil_apply(x_image, y_image, z); }
  /// The induced integer matrix on the abelianisation has determinant +-1.
  bool is_automorphism() const;
  /// x and y are moved by elements of the derived subgroup.
  bool is_ia_map() const;
  /// x^-1 phi(x) and y^-1 phi(y) are central.
  bool is_central_nilmap() const;

  friend bool operator==(const NilMap&, const NilMap&) = default;
};

using N22Map = NilMap<N22Element>;
using N23Map = NilMap<N23Element>;

extern template struct NilMap<N22Element>;
extern template struct NilMap<N23Element>;

/// z^-1 phi(z)
N22Element twist_displacement(const N22Map& phi, const N22Element& z);
N23Element twist_displacement(const N23Map& phi, const N23Element& z);

/// The three maps x -> x^-1 (invert_x), y -> y^-1 (invert_y) and both.
enum class N22Twist { invert_x, invert_y, invert_both };

std::string_view to_string(N22Twist t);
N22Map pinned_map(N22Twist t);

/// Closed-form membership in [e]_phi for a pinned map.
bool n22_unit_class_membership(N22Twist t, const N22Element& target);

struct N22Verdict {
  bool subgroup = false;
  /// (u, v, uv) with u, v members and uv not.
  std::optional<std::vector<N22Element>> witness;
};

/// invert_x and invert_y give subgroups; invert_both fails on (x^2, y^2, x^2y^2).
N22Verdict n22_subgroup_verdict(N22Twist t);

/// Checks products and inverses of all closed-form members with exponents
/// in [-bound, bound]. Returns the first offending pair when closure fails.
std::optional<std::pair<N22Element, N22Element>> n22_closure_on_box(N22Twist t, int bound);

/// Searches z with exponents in [-bound, bound] for z^-1 phi(z) = target.
std::optional<N22Element> n22_bounded_membership(const N22Map& phi, const N22Element& target,
                                                 int bound);
std::optional<N23Element> n23_bounded_membership(const N23Map& phi, const N23Element& target,
                                                 int bound);

/// [g,y], closed form: (0, 0, -a, c - ab, -a(a-1)/2).
N23Element n23_commutator_with_y(const N23Element& g);
/// Membership in [e] for the inner automorphism x -> y^-1 x y.
bool n23_unit_class_membership(const N23Element& t);
/// The inner automorphism x -> y^-1 x y as a map.
N23Map n23_inner_y();

}  // namespace tcc
