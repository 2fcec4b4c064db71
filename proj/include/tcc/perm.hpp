#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tcc/group.hpp"

namespace tcc {

/// Permutation of {0, ..., n-1}; images[i] is the image of point i.
///
/// Products are read left to right: compose(p, q) applies p first, then q.
/// Text form uses 1-based cycle notation, "(123)(45)" or "(1 2 3)(4 5)".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t degree);
  /// Parses juxtaposed cycles; "e", "id" and "()" denote the identity.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  /// Disjoint cycle notation, 1-based, fixed points omitted, "e" for identity.
  /// Compact digits when the degree is at most 9.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

enum class Parity { even, odd };

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Parity parity(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

/// Breadth-first closure of `generators` under `mul`, identity first.
template <class T, class Mul, class Hash = std::hash<T>>
std::vector<T> enumerate_closure(const T& identity, const std::vector<T>& generators, Mul mul,
                                 Hash hash = Hash{}) {
  std::unordered_map<T, std::size_t, Hash> index(16, hash);
  std::vector<T> elements{identity};
  index.emplace(identity, 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const T& g : generators) {
      T p = mul(elements[i], g);
      if (index.find(p) == index.end()) {
        if (elements.size() >= kMaxGroupOrder)
          throw std::invalid_argument("group exceeds the table size ceiling");
        index.emplace(p, elements.size());
        elements.push_back(std::move(p));
      }
    }
  }
  return elements;
}

/// Multiplication table over an explicit closed list of concrete elements.
/// elements[0] must be the identity.
template <class T, class Mul, class Label, class Hash = std::hash<T>>
FiniteGroup table_group(std::string name, const std::vector<T>& elements,
                        const std::vector<T>& generators, std::vector<std::string> names,
                        std::vector<Word> relators, Mul mul, Label label, Hash hash = Hash{}) {
  std::unordered_map<T, Element, Hash> index(16, hash);
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], static_cast<Element>(i));
  const auto n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(mul(elements[a], elements[b]));
      if (it == index.end()) throw std::invalid_argument("element list is not closed");
      table[a * n + b] = it->second;
    }
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(label(e));
  FiniteGroup::Presentation pres;
  for (const auto& g : generators) pres.generators.push_back(index.at(g));
  pres.generator_names = std::move(names);
  pres.relators = std::move(relators);
  return FiniteGroup(std::move(name), std::move(table), std::move(labels), std::move(pres));
}

/// Group generated by permutations, labelled in cycle notation.
FiniteGroup permutation_group(std::string name, const std::vector<Permutation>& generators,
                              std::vector<std::string> names, std::vector<Word> relators);

/// S_n for 2 <= n <= 6, generated by the adjacent transpositions s1..s(n-1).
FiniteGroup symmetric_group(std::size_t n);
/// A_n for 2 <= n <= 6, generated by the 3-cycles (1 2 k).
FiniteGroup alternating_group(std::size_t n);

FiniteGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n generated by a rotation r and a reflection s.
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup quaternion_group();
FiniteGroup klein_four_group();
/// The order-8 group <x, y | x^2, y^2, [x,y]^2, [[x,y],x], [[x,y],y]> with
/// elements listed as e, x, y, xy, [x,y], x[x,y], y[x,y], xy[x,y].
FiniteGroup prop14_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Builds a group from its catalog name: C<n>, cyclic(n), D<n>, dihedral(n),
/// Q8, quaternion8, K4, klein4, prop14, S<n>, A<n>, and direct products
/// joined with 'x' (for example "C2xS3"). Throws std::invalid_argument.
FiniteGroup catalog(std::string_view name);

/// Names used by the invariant sweeps: every catalog group of order <= 60.
std::vector<std::string> catalog_sweep_names();

/// Parses a word over the generator names: juxtaposition, powers "^k",
/// brackets "[u,v]" (x^-1 y^-1 x y), parentheses and "e".
Word parse_word(const FiniteGroup& g, std::string_view text);

/// Resolves an element from its label, cycle notation, or a word in the
/// generators. Throws std::invalid_argument when nothing matches.
Element parse_element(const FiniteGroup& g, std::string_view text);

}  // namespace tcc
