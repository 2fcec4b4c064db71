#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcc {

/// Dense element id inside a FiniteGroup; the identity always has id 0.
using Element = std::uint32_t;

/// Largest group the table representation accepts.
inline constexpr std::size_t kMaxGroupOrder = 5000;

/// One letter of a word: generator index and exponent (+1 or -1).
struct Letter {
  std::size_t generator = 0;
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Sorted set of element ids. Equality of subsets is equality of member lists.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::vector<Element> members);

  static Subset single(Element e) { return Subset(std::vector<Element>{e}); }

  bool contains(Element e) const;
  bool includes(const Subset& other) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Element front() const { return members_.front(); }

  std::span<const Element> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  Subset intersect(const Subset& other) const;
  Subset unite(const Subset& other) const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  std::vector<Element> members_;
};

/// Finite group stored as a full multiplication table.
///
/// Element 0 is the identity. Generators, their names and an optional list of
/// relators (words in the generators) are kept alongside the table so that
/// homomorphisms can be defined by generator images.
class FiniteGroup {
 public:
  struct Presentation {
    std::vector<Element> generators;
    std::vector<std::string> generator_names;
    std::vector<Word> relators;
  };

  /// Builds a group from a row-major table. Validates the group axioms and
  /// that the generators generate everything; throws std::invalid_argument.
  FiniteGroup(std::string name, std::vector<Element> table,
              std::vector<std::string> labels, Presentation presentation);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Element identity() const { return 0; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element power(Element a, long long k) const;
  /// x^g = g^-1 x g
  Element conj(Element x, Element g) const { return mul(mul(inv(g), x), g); }
  /// [x,y] = x^-1 y^-1 x y
  Element commutator(Element x, Element y) const;
  std::size_t element_order(Element a) const;

  bool is_abelian() const;

  std::span<const Element> generators() const { return presentation_.generators; }
  std::span<const std::string> generator_names() const {
    return presentation_.generator_names;
  }
  std::span<const Word> relators() const { return presentation_.relators; }
  bool has_relators() const { return !presentation_.relators.empty(); }
  std::optional<std::size_t> generator_index(std::string_view name) const;

  Element evaluate(const Word& w) const;
  /// Same word evaluated with the generators replaced by `images`.
  Element evaluate(const Word& w, std::span<const Element> images) const;
  std::string word_to_string(const Word& w) const;

  const std::string& label(Element e) const { return labels_[e]; }
  std::optional<Element> find_label(std::string_view text) const;
  std::vector<std::string> labels_of(const Subset& s) const;

  /// All elements 0..order-1.
  Subset all() const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  Presentation presentation_;

  void validate();
};

/// Result of a subgroup test. On failure `product_witness` holds the
/// lexicographically smallest pair (a, b) of members with ab outside the set,
/// or `inverse_witness` the smallest member whose inverse is missing.
struct SubgroupTest {
  bool is_subgroup = false;
  std::optional<std::pair<Element, Element>> product_witness;
  std::optional<Element> inverse_witness;

  explicit operator bool() const { return is_subgroup; }
};

Element commutator(const FiniteGroup& g, Element x, Element y);

Subset closure(const FiniteGroup& g, const Subset& seed);
SubgroupTest is_subgroup(const FiniteGroup& g, const Subset& s);
/// Throws std::invalid_argument when `s` is not a subgroup.
bool is_normal(const FiniteGroup& g, const Subset& s);

Subset center(const FiniteGroup& g);
Subset derived_subgroup(const FiniteGroup& g);
Subset centralizer(const FiniteGroup& g, Element x);
Subset conjugacy_class(const FiniteGroup& g, Element x);
/// Classes ordered by their smallest member.
std::vector<Subset> conjugacy_classes(const FiniteGroup& g);
/// Smallest member of each conjugacy class, ascending.
std::vector<Element> class_representatives(const FiniteGroup& g);

/// Factor group on the cosets of a normal subgroup together with the
/// projection. Cosets are numbered by their smallest member.
struct Quotient {
  FiniteGroup group;
  std::vector<Element> projection;
};

/// Throws std::invalid_argument unless `n` is a normal subgroup.
Quotient quotient(const FiniteGroup& g, const Subset& n);

/// Subgroup `s` as a group in its own right; `embedding[i]` is the parent id
/// of element i.
struct SubgroupView {
  FiniteGroup group;
  std::vector<Element> embedding;
};

SubgroupView subgroup_group(const FiniteGroup& g, const Subset& s);

/// zeta_0 = {e}, zeta_1 = Z(G), ... until the series stops growing.
std::vector<Subset> upper_central_series(const FiniteGroup& g);

struct Nilpotency {
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;
};

Nilpotency is_nilpotent(const FiniteGroup& g);

std::vector<Subset> normal_subgroups(const FiniteGroup& g);
std::vector<Subset> maximal_normal_subgroups(const FiniteGroup& g);
bool is_simple(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

}  // namespace tcc
