#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tcc/integer.hpp"

namespace tcc {

/// Integer Laurent polynomial in one variable l, stored sparsely as
/// exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<Integer, Integer>;

  LaurentPoly() = default;
  /// Drops zero coefficients.
  explicit LaurentPoly(Terms terms);
  static LaurentPoly constant(const Integer& c);
  /// c * l^k
  static LaurentPoly monomial(const Integer& c, const Integer& k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Undefined on zero.
  const Integer& min_exponent() const { return terms_.begin()->first; }
  const Integer& max_exponent() const { return terms_.rbegin()->first; }
  Integer coefficient(const Integer& k) const;

  /// Descending exponents, "c*l^k" terms, e.g. "1-l^-1"; "0" for zero.
  std::string to_string() const;
  /// Inverse of to_string; also accepts spaces, "l" for l^1 and "+" signs.
  static LaurentPoly parse(std::string_view text);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

/// p * l^k
LaurentPoly shift(const LaurentPoly& p, const Integer& k);
/// The q with p = d q when it exists in Z[l, l^-1]. Throws on d = 0.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& d);

}  // namespace tcc
