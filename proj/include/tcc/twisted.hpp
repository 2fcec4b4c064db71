#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcc/group.hpp"
#include "tcc/morphisms.hpp"

namespace tcc {

/// Twisted conjugacy class [x]_phi = { z^-1 x phi(z) : z in G }.
struct TwistedClass {
  Element representative = 0;
  Subset members;
};

struct TwistedPartition {
  /// Classes ordered by their smallest member, which is also the representative.
  std::vector<TwistedClass> classes;

  std::size_t reidemeister() const { return classes.size(); }
  /// Index of the class containing x.
  std::size_t class_of(Element x) const;
};

/// Result kind for statements whose hypotheses may fail on a given group.
enum class Outcome { holds, fails, inapplicable };

std::string_view to_string(Outcome o);

/// z^-1 phi(z)
Element displacement(const FiniteGroup& g, const GroupMap& phi, Element z);

TwistedClass twisted_class(const FiniteGroup& g, const GroupMap& phi, Element x);
Subset unit_class(const FiniteGroup& g, const GroupMap& phi);
/// [e]_h for the inner automorphism x -> h^-1 x h, i.e. { [z,h] : z in G }.
Subset inner_unit_class(const FiniteGroup& g, Element h);
TwistedPartition twisted_partition(const FiniteGroup& g, const GroupMap& phi);

struct UnitClassReport {
  Subset unit_class;
  SubgroupTest subgroup;
  bool normal = false;
  /// |G : [e]_phi| when the class is a subgroup.
  std::optional<std::size_t> index;
};

/// Computes [e]_phi and decides whether it is a subgroup. A subgroup that is
/// not normal would be an internal error and raises std::logic_error.
UnitClassReport unit_class_subgroup_report(const FiniteGroup& g, const GroupMap& phi);

/// [g]_h equals the conjugacy class of g h^-1 right-multiplied by h.
bool prop4_identity(const FiniteGroup& g, Element x, Element h);
/// |[g]_h| = |G : C_G(g h^-1)|.
bool corollary1_identity(const FiniteGroup& g, Element x, Element h);
/// h is not in [e]_h. Throws std::invalid_argument for h = e.
bool lemma1_check(const FiniteGroup& g, Element h);
/// h is outside the subgroup generated by { [z,h] : z in G }.
bool robinson_criterion(const FiniteGroup& g, Element h);

/// Descending chain G > G_1 > G_2 > ... with G_{k+1} = [e]_{h_k}, h_k in G_k.
struct SeriesReport {
  enum class Terminal { reached_trivial, class_not_subgroup, chooser_exhausted };

  std::vector<Subset> chain;
  std::vector<Element> trace;
  Terminal terminal = Terminal::chooser_exhausted;
  /// Step whose class failed the subgroup test.
  std::optional<std::size_t> failed_step;
  /// Last chosen element when the chain reached {e}; it is central.
  std::optional<Element> central_element;
  bool central_certified = false;
  bool strictly_descending = true;
  bool all_normal = true;
};

std::string_view to_string(SeriesReport::Terminal t);

/// Picks the next h from the current (nontrivial) chain member.
using Chooser =
    std::function<std::optional<Element>(const FiniteGroup&, const Subset& current, std::size_t step)>;

/// Smallest non-identity element id.
Chooser smallest_element_chooser();
/// Uses `first` at step 0, then the smallest element.
Chooser starting_with(Element first);

SeriesReport theorem2_series(const FiniteGroup& g, const Chooser& chooser = smallest_element_chooser());

/// The coset of h is a nontrivial central element of G/[e]_h.
/// Throws std::invalid_argument when [e]_h is not a subgroup.
bool prop7_check(const FiniteGroup& g, Element h);
/// [e]_{phi psi} lies in [e]_phi [e]_psi. Throws when either class is not a subgroup.
bool prop3_inclusion(const FiniteGroup& g, const GroupMap& phi, const GroupMap& psi);
/// theta([e]_phi) = [e]_{phi^theta}.
bool prop2_conjugation(const FiniteGroup& g, const GroupMap& phi, const GroupMap& theta);
/// Intersection of [e]_psi over the given automorphisms.
Subset unit_class_intersection(const FiniteGroup& g, const std::vector<GroupMap>& auts);
/// theta(S) = S for every theta in auts.
bool is_invariant(const Subset& s, const std::vector<GroupMap>& auts);

/// True when [e]_h is a subgroup for every h (checked over class representatives).
bool all_inner_unit_classes_subgroups(const FiniteGroup& g);

/// Every maximal normal subgroup has a cyclic quotient of prime order.
Outcome prop6_check(const FiniteGroup& g);
/// G' lies in Z(G), when every nontrivial [e]_h has abelian quotient.
Outcome prop8_check(const FiniteGroup& g);
/// The all-subgroups property passes to every quotient G/N.
Outcome prop5_check(const FiniteGroup& g);
/// [e]_phi is a subgroup of Z(G) for every central endomorphism phi.
Outcome prop12_check(const FiniteGroup& g, const GroupMap& phi);

/// Outer commutator word: leaves are variables 1..n, each used once, and
/// internal nodes are commutator brackets.
class OuterWord {
 public:
  static OuterWord variable(std::size_t index);
  static OuterWord bracket(OuterWord left, OuterWord right);
  /// Parses forms like "[1,2]" or "[[x1,x2],[x3,x4]]" (a leading 'x' is optional).
  static OuterWord parse(std::string_view text);

  /// Number of leaves; throws unless the leaves are exactly 1..n once each.
  std::size_t arity() const;
  std::string to_string() const;
  bool is_variable() const;

  Element evaluate(const FiniteGroup& g, const std::vector<Element>& values) const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  explicit OuterWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  void collect_leaves(std::vector<std::size_t>& out) const;
};

/// Throws std::invalid_argument on arity mismatch.
Element eval_outer_word(const FiniteGroup& g, const OuterWord& w, const std::vector<Element>& values);
/// w(g) lies in every [e]_{g_i} and [e]_{w(g)} lies in their intersection.
/// Throws std::invalid_argument unless every [e]_{g_i} is a subgroup.
bool lemma2_check(const FiniteGroup& g, const OuterWord& w, const std::vector<Element>& values);

struct CommutatorChain {
  /// g_1, [g_1,g_2], [g_1,g_2,g_3], ...
  std::vector<Element> elements;
  /// [e]_{elements[i]}
  std::vector<Subset> classes;
  bool inclusions_hold = true;
  /// Strict inclusion wherever the next iterated commutator is non-central.
  bool strict_where_noncentral = true;
};

/// Throws std::invalid_argument if some class in the chain is not a subgroup.
CommutatorChain prop9_chain(const FiniteGroup& g, const std::vector<Element>& values);

/// prod_i |A_i : [e]_{phi_i}| over the factors A_i = zeta_{i+1}/zeta_i of the
/// upper central series. Throws for non-nilpotent G or non-automorphic phi.
std::size_t kukina_romankov_product(const FiniteGroup& g, const GroupMap& phi);

struct InnerScan {
  bool all_subgroups = true;
  /// Class representatives h whose [e]_h is not a subgroup.
  std::vector<Element> failures;
  Nilpotency nilpotency;
  /// all_subgroups implies nilpotent.
  bool nilpotency_consistent = true;
};

InnerScan scan_all_inner(const FiniteGroup& g);
/// Every nontrivial [e]_h fails the subgroup test. Throws unless g is simple
/// and non-abelian.
bool theorem4_scan(const FiniteGroup& g);
/// In S_n every nontrivial even h has non-subgroup [e]_h. Requires 5 <= n <= 6.
bool prop11_scan(std::size_t n);

}  // namespace tcc
