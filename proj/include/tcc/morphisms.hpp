#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcc/group.hpp"

namespace tcc {

/// Endomorphism of a finite group stored as an id -> id table.
///
/// Maps act on the right as in x^(phi psi) = (x^phi)^psi, so compose(phi, psi)
/// applies phi first and psi second.
class GroupMap {
 public:
  enum class Kind { endomorphism, automorphism };

  /// Checks the homomorphism law on every pair; throws std::invalid_argument.
  static GroupMap from_table(const FiniteGroup& g, std::vector<Element> table);

  Element operator()(Element x) const { return table_[x]; }
  std::span<const Element> table() const { return table_; }
  std::size_t domain_order() const { return table_.size(); }
  Kind kind() const { return automorphism_ ? Kind::automorphism : Kind::endomorphism; }
  bool is_automorphism() const { return automorphism_; }
  /// For finite groups injective, surjective and bijective coincide.
  bool kernel_trivial() const { return automorphism_; }
  Subset kernel() const;
  Subset image() const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) { return a.table_ == b.table_; }
  friend auto operator<=>(const GroupMap& a, const GroupMap& b) { return a.table_ <=> b.table_; }

 private:
  GroupMap(std::vector<Element> table, bool automorphism)
      : table_(std::move(table)), automorphism_(automorphism) {}

  std::vector<Element> table_;
  bool automorphism_ = false;

  friend GroupMap unchecked_map(std::vector<Element> table);
};

/// Outcome of extending generator images to a whole map.
struct Extension {
  std::optional<GroupMap> map;
  std::string rejection;
  std::optional<std::size_t> violated_relator;

  explicit operator bool() const { return map.has_value(); }
};

Extension from_generator_images(const FiniteGroup& g, std::span<const Element> images);

/// Every endomorphism, in lexicographic order of the generator image tuples.
/// Throws when the group carries no relators or the search space exceeds 10^6.
std::vector<GroupMap> enumerate_homomorphisms(const FiniteGroup& g);
std::vector<GroupMap> automorphisms(const FiniteGroup& g);

GroupMap identity_map(const FiniteGroup& g);
GroupMap trivial_map(const FiniteGroup& g);
/// x -> h^-1 x h
GroupMap inner_automorphism(const FiniteGroup& g, Element h);

/// x -> psi(phi(x)). Throws on a size mismatch.
GroupMap compose(const GroupMap& phi, const GroupMap& psi);
GroupMap inverse(const GroupMap& theta);
/// phi^theta = theta^-1 phi theta, i.e. x -> theta(phi(theta^-1(x))).
GroupMap conjugate_map(const GroupMap& phi, const GroupMap& theta);

/// True iff x^-1 phi(x) lies in Z(G) for every x.
bool is_central_morphism(const FiniteGroup& g, const GroupMap& phi);

/// Map induced on G/N; requires phi(N) inside N.
GroupMap induced_on_quotient(const FiniteGroup& g, const GroupMap& phi, const Quotient& q);
/// Restriction to a phi-invariant subgroup.
GroupMap restrict_to(const FiniteGroup& g, const GroupMap& phi, const SubgroupView& s);

struct AutGroup {
  FiniteGroup group;
  /// maps[i] is the automorphism with id i; maps[0] is the identity.
  std::vector<GroupMap> maps;
};

/// Aut G under composition (apply the left factor first).
AutGroup aut_group(const FiniteGroup& g);

struct EndoOrbit {
  /// Indices into the endomorphism list, ascending.
  std::vector<std::size_t> members;
  bool automorphisms = false;

  std::size_t size() const { return members.size(); }
};

/// Orbits of End G under conjugation by Aut G, ordered by first member.
std::vector<EndoOrbit> endo_orbit_census(const std::vector<GroupMap>& endos,
                                         const std::vector<GroupMap>& auts);
std::vector<EndoOrbit> endo_orbit_census(const FiniteGroup& g);

/// "x->y, y->x" using element labels.
std::string map_to_string(const FiniteGroup& g, const GroupMap& phi);
/// Parses "x->y, y->x" over generator names; images may be any element text
/// accepted by parse_element. Throws std::invalid_argument.
GroupMap parse_map(const FiniteGroup& g, std::string_view text);

}  // namespace tcc
