#include "tcc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tcc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[v])
      throw std::invalid_argument("images do not form a bijection");
    hit[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<int> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<int>(i);
  return Permutation(std::move(im));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  Permutation result = identity(degree);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.substr(i) == "e" || text.substr(i) == "id") return result;
  bool any = false;
  while (true) {
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    bool separated = false;
    std::string digits;
    auto flush = [&] {
      if (digits.empty()) return;
      if (separated) {
        cycle.push_back(std::stoi(digits));
      } else {
        for (char c : digits) cycle.push_back(c - '0');
      }
      digits.clear();
    };
    // "(1 2 10)" and "(1,2,3)" use separators; "(123)" is one digit per point.
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
    auto body = text.substr(i, close - i);
    separated = body.find_first_of(" ,") != std::string_view::npos;
    for (char c : body) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
      } else if (c == ' ' || c == ',') {
        flush();
      } else {
        throw std::invalid_argument("unexpected character in cycle notation");
      }
    }
    flush();
    i = close + 1;
    any = true;
    if (cycle.empty()) continue;
    std::vector<int> images = identity(degree).images_;
    std::vector<char> used(degree + 1, 0);
    for (int p : cycle) {
      if (p < 1 || static_cast<std::size_t>(p) > degree)
        throw std::invalid_argument("point " + std::to_string(p) + " outside degree");
      if (used[p]) throw std::invalid_argument("repeated point in cycle");
      used[p] = 1;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()] - 1;
    result = compose(result, Permutation(std::move(images)));
  }
  if (!any) throw std::invalid_argument("empty permutation text");
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_string() const {
  if (is_identity()) return "e";
  const bool compact = degree() <= 9;
  std::ostringstream os;
  std::vector<char> seen(degree(), 0);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    os << '(';
    std::size_t p = start;
    bool first = true;
    do {
      if (!first && !compact) os << ' ';
      first = false;
      os << p + 1;
      seen[p] = 1;
      p = static_cast<std::size_t>(images_[p]);
    } while (p != start);
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) im[i] = q(p(static_cast<int>(i)));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> im(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) im[static_cast<std::size_t>(p(static_cast<int>(i)))] = static_cast<int>(i);
  return Permutation(std::move(im));
}

Parity parity(const Permutation& p) {
  std::size_t transpositions = 0;
  std::vector<char> seen(p.degree(), 0);
  for (std::size_t s = 0; s < p.degree(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p(static_cast<int>(x)))) {
      seen[x] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = p.degree();
  for (int v : p.images()) h = h * 31 + static_cast<std::size_t>(v);
  return h;
}

FiniteGroup permutation_group(std::string name, const std::vector<Permutation>& generators,
                              std::vector<std::string> names, std::vector<Word> relators) {
  if (generators.empty()) throw std::invalid_argument("permutation_group needs generators");
  auto id = Permutation::identity(generators.front().degree());
  auto elements = enumerate_closure(
      id, generators, [](const Permutation& a, const Permutation& b) { return compose(a, b); },
      PermutationHash{});
  return table_group(
      std::move(name), elements, generators, std::move(names), std::move(relators),
      [](const Permutation& a, const Permutation& b) { return compose(a, b); },
      [](const Permutation& p) { return p.to_string(); }, PermutationHash{});
}

namespace {

Word letters(std::initializer_list<std::pair<std::size_t, int>> ls) {
  Word w;
  for (auto [g, e] : ls) w.push_back({g, e});
  return w;
}

Permutation cycle_perm(std::size_t degree, std::initializer_list<int> points) {
  std::vector<int> im = Permutation::identity(degree).images();
  std::vector<int> pts(points);
  for (std::size_t k = 0; k < pts.size(); ++k) im[pts[k] - 1] = pts[(k + 1) % pts.size()] - 1;
  return Permutation(std::move(im));
}

}  // namespace

FiniteGroup symmetric_group(std::size_t n) {
  if (n < 2 || n > 6) throw std::invalid_argument("symmetric_group: n must be in 2..6");
  std::vector<Permutation> gens;
  std::vector<std::string> names;
  for (std::size_t i = 1; i < n; ++i) {
    gens.push_back(cycle_perm(n, {static_cast<int>(i), static_cast<int>(i + 1)}));
    names.push_back("s" + std::to_string(i));
  }
  // Coxeter relations.
  std::vector<Word> rels;
  const auto k = gens.size();
  for (std::size_t i = 0; i < k; ++i) {
    rels.push_back(letters({{i, 1}, {i, 1}}));
    for (std::size_t j = i + 1; j < k; ++j) {
      Word w;
      int reps = j == i + 1 ? 3 : 2;
      for (int r = 0; r < reps; ++r) {
        w.push_back({i, 1});
        w.push_back({j, 1});
      }
      rels.push_back(std::move(w));
    }
  }
  return permutation_group("S" + std::to_string(n), gens, std::move(names), std::move(rels));
}

FiniteGroup alternating_group(std::size_t n) {
  if (n < 2 || n > 6) throw std::invalid_argument("alternating_group: n must be in 2..6");
  if (n == 2) {
    FiniteGroup::Presentation pres;
    return FiniteGroup("A2", {0}, {"e"}, std::move(pres));
  }
  std::vector<Permutation> gens;
  std::vector<std::string> names;
  for (std::size_t i = 3; i <= n; ++i) {
    gens.push_back(cycle_perm(n, {1, 2, static_cast<int>(i)}));
    names.push_back("a" + std::to_string(i - 2));
  }
  // x_i^3 = (x_i x_j)^2 = 1
  std::vector<Word> rels;
  const auto k = gens.size();
  for (std::size_t i = 0; i < k; ++i) {
    rels.push_back(letters({{i, 1}, {i, 1}, {i, 1}}));
    for (std::size_t j = i + 1; j < k; ++j)
      rels.push_back(letters({{i, 1}, {j, 1}, {i, 1}, {j, 1}}));
  }
  return permutation_group("A" + std::to_string(n), gens, std::move(names), std::move(rels));
}

}  // namespace tcc
