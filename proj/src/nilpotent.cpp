#include "tcc/nilpotent.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tcc {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  Integer n(std::string(text.substr(i)));
  return text[0] == '-' ? Integer(-n) : n;
}

namespace {

template <std::size_t N>
std::string print_terms(const std::array<const char*, N>& names, const std::array<const Integer*, N>& exps) {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += ' ';
    out += names[i];
    out += '^';
    out += exps[i]->str();
  }
  return out;
}

template <std::size_t N>
std::array<Integer, N> parse_terms(const std::array<const char*, N>& names, std::string_view text) {
  std::array<Integer, N> exps{};
  std::istringstream in{std::string(text)};
  std::string token;
  std::size_t next = 0;
  bool any = false;
  while (in >> token) {
    if (token == "e" && !any) {
      any = true;
      next = N;
      continue;
    }
    any = true;
    std::size_t match = N;
    for (std::size_t i = next; i < N && match == N; ++i) {
      std::string_view name = names[i];
      if (token.compare(0, name.size(), name) == 0 &&
          (token.size() == name.size() || token[name.size()] == '^'))
        match = i;
    }
    if (match == N) throw std::invalid_argument("unexpected term '" + token + "'");
    std::string_view name = names[match];
    exps[match] = token.size() == name.size()
                      ? Integer(1)
                      : parse_integer(std::string_view(token).substr(name.size() + 1));
    next = match + 1;
  }
  if (!any) throw std::invalid_argument("empty normal form");
  return exps;
}

constexpr std::array<const char*, 3> kN22Names{"x", "y", "[x,y]"};
constexpr std::array<const char*, 5> kN23Names{"x", "y", "[y,x]", "[[y,x],y]", "[[y,x],x]"};

template <class E>
E generic_power(const E& u, const Integer& k) {
  E base = k < 0 ? inverse(u) : u;
  Integer n = k < 0 ? Integer(-k) : k;
  E acc = E::identity();
  while (n > 0) {
    if (n & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    n >>= 1;
  }
  return acc;
}

Integer half_pair(const Integer& a) { return a * (a - 1) / 2; }

}  // namespace

std::string N22Element::to_string() const { return print_terms(kN22Names, std::array{&a, &b, &c}); }

N22Element N22Element::parse(std::string_view text) {
  auto e = parse_terms(kN22Names, text);
  return {e[0], e[1], e[2]};
}

std::string N23Element::to_string() const {
  return print_terms(kN23Names, std::array{&a, &b, &c, &d, &f});
}

N23Element N23Element::parse(std::string_view text) {
  auto e = parse_terms(kN23Names, text);
  return {e[0], e[1], e[2], e[3], e[4]};
}

// y^b x^a' = x^a' y^b [x,y]^(-a'b)
N22Element multiply(const N22Element& u, const N22Element& v) {
  return {u.a + v.a, u.b + v.b, u.c + v.c - v.a * u.b};
}

N22Element inverse(const N22Element& u) { return {-u.a, -u.b, -u.c - u.a * u.b}; }

N22Element power(const N22Element& u, const Integer& k) { return generic_power(u, k); }

N22Element commutator(const N22Element& u, const N22Element& v) {
  return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
}

bool is_central(const N22Element& u) { return u.a == 0 && u.b == 0; }

// With c = [y,x], d = [c,y], f = [c,x]:
//   y^b x^a' = x^a' y^b c^(a'b) d^(a' b(b-1)/2) f^(b a'(a'-1)/2)
//   c^C x^a' = x^a' c^C f^(C a'),  c^K y^b' = y^b' c^K d^(K b')
N23Element multiply(const N23Element& u, const N23Element& v) {
  Integer k = v.a * u.b + u.c;
  return {u.a + v.a,
          u.b + v.b,
          k + v.c,
          u.d + v.d + v.a * half_pair(u.b) + k * v.b,
          u.f + v.f + u.b * half_pair(v.a) + u.c * v.a};
}

N23Element inverse(const N23Element& u) {
  // f^-F d^-D c^-C y^-b x^-a
  N23Element r{0, 0, -u.c, -u.d, -u.f};
  r = multiply(r, N23Element{0, -u.b, 0, 0, 0});
  return multiply(r, N23Element{-u.a, 0, 0, 0, 0});
}

N23Element power(const N23Element& u, const Integer& k) { return generic_power(u, k); }

N23Element commutator(const N23Element& u, const N23Element& v) {
  return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
}

bool is_central(const N23Element& u) { return u.a == 0 && u.b == 0 && u.c == 0; }

N22Element nil_apply(const N22Element& x_image, const N22Element& y_image, const N22Element& z) {
  N22Element r = multiply(power(x_image, z.a), power(y_image, z.b));
  return multiply(r, power(commutator(x_image, y_image), z.c));
}

N23Element nil_apply(const N23Element& x_image, const N23Element& y_image, const N23Element& z) {
  N23Element c = commutator(y_image, x_image);
  N23Element r = multiply(power(x_image, z.a), power(y_image, z.b));
  r = multiply(r, power(c, z.c));
  r = multiply(r, power(commutator(c, y_image), z.d));
  return multiply(r, power(commutator(c, x_image), z.f));
}

template <class E>
bool NilMap<E>::is_automorphism() const {
  Integer det = x_image.a * y_image.b - x_image.b * y_image.a;
  return det == 1 || det == -1;
}

template <class E>
bool NilMap<E>::is_ia_map() const {
  return x_image.a == 1 && x_image.b == 0 && y_image.a == 0 && y_image.b == 1;
}

template <class E>
bool NilMap<E>::is_central_nilmap() const {
  return is_central(multiply(inverse(E::x()), x_image)) && is_central(multiply(inverse(E::y()), y_image));
}

template struct NilMap<N22Element>;
template struct NilMap<N23Element>;

N22Element twist_displacement(const N22Map& phi, const N22Element& z) { return multiply(inverse(z), phi(z)); }
N23Element twist_displacement(const N23Map& phi, const N23Element& z) { return multiply(inverse(z), phi(z)); }

std::string_view to_string(N22Twist t) {
  switch (t) {
    case N22Twist::invert_x:
      return "invert_x";
    case N22Twist::invert_y:
      return "invert_y";
    case N22Twist::invert_both:
      return "invert_both";
  }
  return "?";
}

N22Map pinned_map(N22Twist t) {
  switch (t) {
    case N22Twist::invert_x:
      return {{-1, 0, 0}, N22Element::y()};
    case N22Twist::invert_y:
      return {N22Element::x(), {0, -1, 0}};
    case N22Twist::invert_both:
      return {{-1, 0, 0}, {0, -1, 0}};
  }
  throw std::invalid_argument("unsupported map");
}

namespace {

bool even(const Integer& n) { return n % 2 == 0; }

}  // namespace

// Displacements: invert_x (-2a, 0, -2c-2ab); invert_y (0, -2b, -2c);
// invert_both (-2a, -2b, -2ab).
bool n22_unit_class_membership(N22Twist t, const N22Element& target) {
  const auto& [a, b, c] = target;
  switch (t) {
    case N22Twist::invert_x:
      return even(a) && b == 0 && even(c);
    case N22Twist::invert_y:
      return a == 0 && even(b) && even(c);
    case N22Twist::invert_both:
      return even(a) && even(b) && 2 * c == -a * b;
  }
  throw std::invalid_argument("unsupported map");
}

N22Verdict n22_subgroup_verdict(N22Twist t) {
  if (t == N22Twist::invert_both) {
    N22Element u{2, 0, 0}, v{0, 2, 0};
    N22Element uv = multiply(u, v);
    if (n22_unit_class_membership(t, u) && n22_unit_class_membership(t, v) &&
        !n22_unit_class_membership(t, uv))
      return {false, std::vector<N22Element>{u, v, uv}};
    throw std::logic_error("expected witness failed");
  }
  return {true, std::nullopt};
}

std::optional<std::pair<N22Element, N22Element>> n22_closure_on_box(N22Twist t, int bound) {
  std::vector<N22Element> members;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c) {
        N22Element z{a, b, c};
        if (n22_unit_class_membership(t, z)) members.push_back(z);
      }
  for (const auto& u : members) {
    if (!n22_unit_class_membership(t, inverse(u))) return std::pair{u, u};
    for (const auto& v : members)
      if (!n22_unit_class_membership(t, multiply(u, v))) return std::pair{u, v};
  }
  return std::nullopt;
}

std::optional<N22Element> n22_bounded_membership(const N22Map& phi, const N22Element& target, int bound) {
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c) {
        N22Element z{a, b, c};
        if (twist_displacement(phi, z) == target) return z;
      }
  return std::nullopt;
}

std::optional<N23Element> n23_bounded_membership(const N23Map& phi, const N23Element& target, int bound) {
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d)
          for (int f = -bound; f <= bound; ++f) {
            N23Element z{a, b, c, d, f};
            if (twist_displacement(phi, z) == target) return z;
          }
  return std::nullopt;
}

N23Element n23_commutator_with_y(const N23Element& g) {
  return {0, 0, -g.a, g.c - g.a * g.b, -half_pair(g.a)};
}

bool n23_unit_class_membership(const N23Element& t) {
  if (t.a != 0 || t.b != 0) return false;
  Integer a = -t.c;
  return t.f == -half_pair(a);
}

N23Map n23_inner_y() {
  // y^-1 x y = x [x,y] = x c^-1, y fixed
  return {multiply(N23Element::x(), inverse(N23Element{0, 0, 1, 0, 0})), N23Element::y()};
}

}  // namespace tcc
