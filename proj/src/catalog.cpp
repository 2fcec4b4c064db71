#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "tcc/perm.hpp"

namespace tcc {

namespace {

std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

Word repeat(std::size_t generator, std::size_t times) {
  return Word(times, Letter{generator, 1});
}

Word commutator_word(const Word& u, const Word& v);

Word inverse_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word commutator_word(const Word& u, const Word& v) {
  return concat({inverse_word(u), inverse_word(v), u, v});
}

struct PairHash {
  std::size_t operator()(const std::pair<Element, Element>& p) const {
    return static_cast<std::size_t>(p.first) * 7919u + p.second;
  }
};

struct Quaternion {
  int w = 1, i = 0, j = 0, k = 0;
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion hamilton(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.i * b.i - a.j * b.j - a.k * b.k,
          a.w * b.i + a.i * b.w + a.j * b.k - a.k * b.j,
          a.w * b.j - a.i * b.k + a.j * b.w + a.k * b.i,
          a.w * b.k + a.i * b.j - a.j * b.i + a.k * b.w};
}

struct QuaternionHash {
  std::size_t operator()(const Quaternion& q) const {
    return static_cast<std::size_t>((q.w + 2) * 125 + (q.i + 2) * 25 + (q.j + 2) * 5 + (q.k + 2));
  }
};

std::string quaternion_label(const Quaternion& q) {
  std::string sign = (q.w + q.i + q.j + q.k) < 0 ? "-" : "";
  if (q.w != 0) return sign + "1";
  if (q.i != 0) return sign + "i";
  if (q.j != 0) return sign + "j";
  return sign + "k";
}

std::size_t parse_size(std::string_view digits, std::string_view whole) {
  std::size_t n = 0;
  auto res = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (res.ec != std::errc() || res.ptr != digits.data() + digits.size() || digits.empty())
    throw std::invalid_argument("unknown group: " + std::string(whole));
  return n;
}

FiniteGroup single_catalog(std::string_view name) {
  auto lower = std::string(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "q8" || lower == "quaternion8") return quaternion_group();
  if (lower == "k4" || lower == "klein4" || lower == "v4") return klein_four_group();
  if (lower == "prop14") return prop14_group();

  auto with_arg = [&](std::string_view prefix) -> std::optional<std::size_t> {
    std::string_view s(lower);
    if (s.substr(0, prefix.size()) != prefix) return std::nullopt;
    s.remove_prefix(prefix.size());
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    return parse_size(s, name);
  };
  if (lower.rfind("cyclic", 0) == 0) return cyclic_group(*with_arg("cyclic"));
  if (lower.rfind("dihedral", 0) == 0) return dihedral_group(*with_arg("dihedral"));
  if (lower.size() >= 2) {
    switch (lower.front()) {
      case 'c':
      case 'z':
        return cyclic_group(*with_arg(lower.substr(0, 1)));
      case 'd':
        return dihedral_group(*with_arg("d"));
      case 's':
        return symmetric_group(*with_arg("s"));
      case 'a':
        return alternating_group(*with_arg("a"));
      default:
        break;
    }
  }
  throw std::invalid_argument("unknown group: " + std::string(name));
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n < 1 || n > kMaxGroupOrder) throw std::invalid_argument("cyclic_group: bad order");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  std::vector<std::string> labels{"e"};
  for (std::size_t k = 1; k < n; ++k) labels.push_back(power_label("a", k));
  FiniteGroup::Presentation pres{{n > 1 ? Element{1} : Element{0}}, {"a"}, {repeat(0, n)}};
  return FiniteGroup("C" + std::to_string(n), std::move(table), std::move(labels),
                     std::move(pres));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 1 || 2 * n > kMaxGroupOrder) throw std::invalid_argument("dihedral_group: bad n");
  // (f, k) stands for s^f r^k; r^k s = s r^-k.
  using Pair = std::pair<Element, Element>;
  auto mul = [n](const Pair& a, const Pair& b) {
    std::size_t k = b.first ? (n - a.second) % n : a.second;
    return Pair{a.first ^ b.first, static_cast<Element>((k + b.second) % n)};
  };
  std::vector<Pair> elements;
  for (Element f = 0; f < 2; ++f)
    for (Element k = 0; k < n; ++k) elements.push_back({f, k});
  auto label = [](const Pair& p) {
    std::string r = power_label("r", p.second);
    if (p.first == 0) return r.empty() ? std::string("e") : r;
    return "s" + r;
  };
  std::vector<Word> rels{repeat(0, n), repeat(1, 2), concat({{{1, 1}}, {{0, 1}}, {{1, 1}}, {{0, 1}}})};
  return table_group("D" + std::to_string(n), elements,
                     {Pair{0, static_cast<Element>(1 % n)}, Pair{1, 0}}, {"r", "s"},
                     std::move(rels), mul, label, PairHash{});
}

FiniteGroup quaternion_group() {
  std::vector<Quaternion> elements{{1, 0, 0, 0},  {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0},
                                   {0, 0, 1, 0},  {0, 0, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, -1}};
  // i^4, i^2 j^-2, j^-1 i j i
  std::vector<Word> rels{repeat(0, 4), Word{{0, 1}, {0, 1}, {1, -1}, {1, -1}},
                         Word{{1, -1}, {0, 1}, {1, 1}, {0, 1}}};
  return table_group("Q8", elements, {elements[2], elements[4]}, {"i", "j"}, std::move(rels),
                     hamilton, quaternion_label, QuaternionHash{});
}

FiniteGroup klein_four_group() {
  std::vector<Element> table{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  FiniteGroup::Presentation pres{
      {1, 2}, {"a", "b"}, {repeat(0, 2), repeat(1, 2), commutator_word({{0, 1}}, {{1, 1}})}};
  return FiniteGroup("K4", std::move(table), {"e", "a", "b", "ab"}, std::move(pres));
}

FiniteGroup prop14_group() {
  // Realized on the vertices of a square: x = (2 4), y = (1 2)(3 4), xy = (1 2 3 4).
  const Permutation x = Permutation::parse("(24)", 4);
  const Permutation y = Permutation::parse("(12)(34)", 4);
  const Permutation e = Permutation::identity(4);
  auto mul = [](const Permutation& a, const Permutation& b) { return compose(a, b); };
  const Permutation xy = mul(x, y);
  const Permutation c = mul(mul(inverse(x), inverse(y)), xy);
  std::vector<Permutation> elements{e, x, y, xy, c, mul(x, c), mul(y, c), mul(xy, c)};
  const std::vector<std::string> names{"e", "x", "y", "xy", "[x,y]", "x[x,y]", "y[x,y]",
                                       "xy[x,y]"};
  const Word wx{{0, 1}}, wy{{1, 1}};
  const Word wc = commutator_word(wx, wy);
  std::vector<Word> rels{repeat(0, 2), repeat(1, 2), concat({wc, wc}), commutator_word(wc, wx),
                         commutator_word(wc, wy)};
  auto label = [&](const Permutation& p) {
    auto it = std::find(elements.begin(), elements.end(), p);
    return names[static_cast<std::size_t>(it - elements.begin())];
  };
  return table_group("prop14", elements, {x, y}, {"x", "y"}, std::move(rels), mul, label,
                     PermutationHash{});
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  using Pair = std::pair<Element, Element>;
  auto mul = [&](const Pair& p, const Pair& q) {
    return Pair{a.mul(p.first, q.first), b.mul(p.second, q.second)};
  };
  std::vector<Pair> elements;
  for (Element i = 0; i < a.order(); ++i)
    for (Element j = 0; j < b.order(); ++j) elements.push_back({i, j});
  if (elements.size() > kMaxGroupOrder) throw std::invalid_argument("direct product too large");

  std::vector<Pair> gens;
  std::vector<std::string> names;
  const auto na = a.generators().size();
  const auto nb = b.generators().size();
  bool clash = false;
  for (const auto& s : a.generator_names())
    if (b.generator_index(s)) clash = true;
  for (std::size_t i = 0; i < na; ++i) {
    gens.push_back({a.generators()[i], 0});
    names.push_back(std::string(a.generator_names()[i]) + (clash ? "1" : ""));
  }
  for (std::size_t i = 0; i < nb; ++i) {
    gens.push_back({0, b.generators()[i]});
    names.push_back(std::string(b.generator_names()[i]) + (clash ? "2" : ""));
  }
  std::vector<Word> rels;
  for (const auto& w : a.relators()) rels.push_back(w);
  for (const auto& w : b.relators()) {
    Word shifted = w;
    for (auto& l : shifted) l.generator += na;
    rels.push_back(std::move(shifted));
  }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      rels.push_back(commutator_word({{i, 1}}, {{na + j, 1}}));
  auto label = [&](const Pair& p) {
    if (p.first == 0 && p.second == 0) return std::string("e");
    return "(" + a.label(p.first) + "," + b.label(p.second) + ")";
  };
  return table_group(a.name() + "x" + b.name(), elements, gens, std::move(names),
                     std::move(rels), mul, label, PairHash{});
}

FiniteGroup catalog(std::string_view name) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == 'x' || name[i] == 'X') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  // Names that contain an 'x' themselves are not split.
  if (parts.size() == 1 || name == "prop14") return single_catalog(name);
  for (auto p : parts)
    if (p.empty()) throw std::invalid_argument("unknown group: " + std::string(name));
  FiniteGroup g = single_catalog(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, single_catalog(parts[i]));
  return g;
}

std::vector<std::string> catalog_sweep_names() {
  return {"C1", "C2",  "C3",   "C4",      "C5",   "C6",   "C8",       "C12",
          "K4", "D3",  "D4",   "D5",      "D6",   "Q8",   "prop14",   "S3",
          "S4", "A4",  "A5",   "C2xC2xC2", "C4xC2", "C2xS3", "C3xS3", "C2xQ8",
          "C2xD4", "C2xA4"};
}

namespace {

class WordParser {
 public:
  WordParser(const FiniteGroup& g, std::string_view text) : g_(g), text_(text) {}

  Word parse() {
    Word w = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  const FiniteGroup& g_;
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("cannot parse word '" + std::string(text_) + "': " + msg);
  }

  void skip() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*' ||
            text_[pos_] == '.'))
      ++pos_;
  }

  bool at_factor_start() {
    skip();
    if (pos_ == text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '[' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Word expr() {
    Word w;
    while (at_factor_start()) {
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  Word factor() {
    Word base = primary();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      int k = 0;
      auto sv = text_.substr(start, pos_ - start);
      if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
      auto res = std::from_chars(sv.data(), sv.data() + sv.size(), k);
      if (res.ec != std::errc() || res.ptr != sv.data() + sv.size()) fail("bad exponent");
      Word unit = k < 0 ? inverse_word(base) : base;
      Word out;
      for (int i = 0; i < std::abs(k); ++i) out.insert(out.end(), unit.begin(), unit.end());
      return out;
    }
    return base;
  }

  Word primary() {
    skip();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = expr();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = expr();
      expect(',');
      Word v = expr();
      // [a,b,c] = [[a,b],c]
      Word w = commutator_word(u, v);
      skip();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        w = commutator_word(w, expr());
        skip();
      }
      expect(']');
      return w;
    }
    // Longest generator name matching here.
    std::size_t best = 0, best_len = 0;
    for (std::size_t i = 0; i < g_.generator_names().size(); ++i) {
      const auto& nm = g_.generator_names()[i];
      if (nm.size() > best_len && text_.substr(pos_, nm.size()) == nm) {
        best = i;
        best_len = nm.size();
      }
    }
    if (best_len == 0) {
      if (c == 'e' || c == '1') {
        ++pos_;
        return {};
      }
      fail("unknown generator at '" + std::string(text_.substr(pos_)) + "'");
    }
    pos_ += best_len;
    return {{best, 1}};
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
};

bool looks_like_cycles(std::string_view text) {
  if (text.empty() || text.front() != '(') return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ' ' ||
           c == ',';
  });
}

}  // namespace

Word parse_word(const FiniteGroup& g, std::string_view text) {
  return WordParser(g, text).parse();
}

Element parse_element(const FiniteGroup& g, std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto e = g.find_label(text)) return *e;
  if (looks_like_cycles(text)) {
    Permutation p = Permutation::parse(text, 9);
    if (auto e = g.find_label(p.to_string())) return *e;
    throw std::invalid_argument("permutation " + std::string(text) + " is not in " + g.name());
  }
  return g.evaluate(parse_word(g, text));
}

}  // namespace tcc
