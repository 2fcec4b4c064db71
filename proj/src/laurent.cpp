#include "tcc/laurent.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace tcc {

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [k, c] : terms)
    if (c != 0) terms_.emplace(k, std::move(c));
}

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, const Integer& k) {
  Terms t;
  t.emplace(k, c);
  return LaurentPoly(std::move(t));
}

Integer LaurentPoly::coefficient(const Integer& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += 'l';
    if (k != 1) out += "^" + k.str();
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::size_t pos = 0;
  auto digits = [&] {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  auto fail = [&]() -> LaurentPoly {
    throw std::invalid_argument("bad polynomial '" + std::string(text) + "' at offset " + std::to_string(pos));
  };
  LaurentPoly acc;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      fail();
    }
    first = false;
    Integer coef = 1;
    Integer exp = 0;
    std::string num = digits();
    bool has_var = false;
    if (!num.empty()) {
      coef = Integer(num);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'l') fail();
      }
    }
    if (pos < s.size() && s[pos] == 'l') {
      has_var = true;
      ++pos;
      exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        bool neg_exp = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg_exp = s[pos++] == '-';
        std::string e = digits();
        if (e.empty()) fail();
        exp = Integer(e);
        if (neg_exp) exp = -exp;
      }
    }
    if (num.empty() && !has_var) fail();
    if (negative) coef = -coef;
    acc = acc + monomial(coef, exp);
  }
  return acc;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly::Terms t = p.terms();
  for (const auto& [k, c] : q.terms()) t[k] += c;
  return LaurentPoly(std::move(t));
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly::Terms t;
  for (const auto& [k, c] : p.terms()) t.emplace(k, -c);
  return LaurentPoly(std::move(t));
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return p + (-q); }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly::Terms t;
  for (const auto& [i, a] : p.terms())
    for (const auto& [j, b] : q.terms()) t[i + j] += a * b;
  return LaurentPoly(std::move(t));
}

LaurentPoly shift(const LaurentPoly& p, const Integer& k) {
  LaurentPoly::Terms t;
  for (const auto& [i, a] : p.terms()) t.emplace(i + k, a);
  return LaurentPoly(std::move(t));
}

// Both sides are normalised to ordinary polynomials with nonzero constant
// term; l is then prime to the divisor, so Laurent divisibility reduces to
// long division over Z[l].
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly();
  const Integer offset = p.min_exponent() - d.min_exponent();
  auto dense = [](const LaurentPoly& q) {
    std::vector<Integer> v(static_cast<std::size_t>(q.max_exponent() - q.min_exponent()) + 1);
    for (const auto& [k, c] : q.terms()) v[static_cast<std::size_t>(k - q.min_exponent())] = c;
    return v;
  };
  std::vector<Integer> rem = dense(p);
  const std::vector<Integer> div = dense(d);
  if (rem.size() < div.size()) return std::nullopt;
  std::vector<Integer> quot(rem.size() - div.size() + 1);
  const Integer& lead = div.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Integer& top = rem[i + div.size() - 1];
    if (top % lead != 0) return std::nullopt;
    quot[i] = top / lead;
    if (quot[i] == 0) continue;
    for (std::size_t j = 0; j < div.size(); ++j) rem[i + j] -= quot[i] * div[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  LaurentPoly::Terms t;
  for (std::size_t i = 0; i < quot.size(); ++i) t.emplace(Integer(i) + offset, quot[i]);
  return LaurentPoly(std::move(t));
}

}  // namespace tcc
