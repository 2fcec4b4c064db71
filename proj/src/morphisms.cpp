#include "tcc/morphisms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "tcc/perm.hpp"

namespace tcc {

namespace {

bool is_bijection(const std::vector<Element>& t) {
  std::vector<char> hit(t.size(), 0);
  for (Element v : t) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool respects_multiplication(const FiniteGroup& g, const std::vector<Element>& t) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (t[g.mul(a, b)] != g.mul(t[a], t[b])) return false;
  return true;
}

}  // namespace

GroupMap unchecked_map(std::vector<Element> table) {
  bool bij = is_bijection(table);
  return GroupMap(std::move(table), bij);
}

GroupMap GroupMap::from_table(const FiniteGroup& g, std::vector<Element> table) {
  if (table.size() != g.order()) throw std::invalid_argument("map table has wrong size");
  for (Element v : table)
    if (v >= g.order()) throw std::invalid_argument("map image out of range");
  if (!respects_multiplication(g, table))
    throw std::invalid_argument("map is not a homomorphism");
  bool bij = is_bijection(table);
  return GroupMap(std::move(table), bij);
}

Subset GroupMap::kernel() const {
  std::vector<Element> k;
  for (Element x = 0; x < table_.size(); ++x)
    if (table_[x] == 0) k.push_back(x);
  return Subset(std::move(k));
}

Subset GroupMap::image() const { return Subset(table_); }

Extension from_generator_images(const FiniteGroup& g, std::span<const Element> images) {
  Extension ext;
  const auto gens = g.generators();
  if (images.size() != gens.size()) {
    ext.rejection = "expected one image per generator";
    return ext;
  }
  for (Element v : images)
    if (v >= g.order()) {
      ext.rejection = "image out of range";
      return ext;
    }
  for (std::size_t r = 0; r < g.relators().size(); ++r) {
    if (g.evaluate(g.relators()[r], images) != g.identity()) {
      ext.rejection = "relator " + g.word_to_string(g.relators()[r]) + " is not mapped to e";
      ext.violated_relator = r;
      return ext;
    }
  }
  constexpr Element unset = ~Element{0};
  std::vector<Element> table(g.order(), unset);
  table[g.identity()] = g.identity();
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    Element a = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element b = g.mul(a, gens[i]);
      Element v = g.mul(table[a], images[i]);
      if (table[b] == unset) {
        table[b] = v;
        queue.push_back(b);
      } else if (table[b] != v) {
        ext.rejection = "generator images do not extend to a well-defined map";
        return ext;
      }
    }
  }
  if (!respects_multiplication(g, table)) {
    ext.rejection = "extension is not a homomorphism";
    return ext;
  }
  ext.map = unchecked_map(std::move(table));
  return ext;
}

std::vector<GroupMap> enumerate_homomorphisms(const FiniteGroup& g) {
  if (!g.has_relators() && g.order() > 1)
    throw std::invalid_argument("enumerate_homomorphisms: group has no relators");
  const auto k = g.generators().size();
  double space = 1;
  for (std::size_t i = 0; i < k; ++i) space *= static_cast<double>(g.order());
  if (space > 1e6) throw std::invalid_argument("enumerate_homomorphisms: search space too large");

  std::vector<GroupMap> out;
  std::vector<Element> images(k, 0);
  const auto n = static_cast<Element>(g.order());
  while (true) {
    if (auto ext = from_generator_images(g, images)) out.push_back(std::move(*ext.map));
    // Odometer with the first generator most significant.
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++images[pos] < n) break;
      images[pos] = 0;
      if (pos == 0) return out;
    }
    if (k == 0) return out;
  }
}

std::vector<GroupMap> automorphisms(const FiniteGroup& g) {
  std::vector<GroupMap> out;
  for (auto& m : enumerate_homomorphisms(g))
    if (m.is_automorphism()) out.push_back(std::move(m));
  return out;
}

GroupMap identity_map(const FiniteGroup& g) {
  std::vector<Element> t(g.order());
  for (Element x = 0; x < g.order(); ++x) t[x] = x;
  return unchecked_map(std::move(t));
}

GroupMap trivial_map(const FiniteGroup& g) {
  return unchecked_map(std::vector<Element>(g.order(), g.identity()));
}

GroupMap inner_automorphism(const FiniteGroup& g, Element h) {
  std::vector<Element> t(g.order());
  for (Element x = 0; x < g.order(); ++x) t[x] = g.conj(x, h);
  return unchecked_map(std::move(t));
}

GroupMap compose(const GroupMap& phi, const GroupMap& psi) {
  if (phi.domain_order() != psi.domain_order())
    throw std::invalid_argument("compose: maps on different groups");
  std::vector<Element> t(phi.domain_order());
  for (Element x = 0; x < t.size(); ++x) t[x] = psi(phi(x));
  return unchecked_map(std::move(t));
}

GroupMap inverse(const GroupMap& theta) {
  if (!theta.is_automorphism()) throw std::invalid_argument("inverse: not an automorphism");
  std::vector<Element> t(theta.domain_order());
  for (Element x = 0; x < t.size(); ++x) t[theta(x)] = x;
  return unchecked_map(std::move(t));
}

GroupMap conjugate_map(const GroupMap& phi, const GroupMap& theta) {
  if (phi.domain_order() != theta.domain_order())
    throw std::invalid_argument("conjugate_map: maps on different groups");
  return compose(compose(inverse(theta), phi), theta);
}

bool is_central_morphism(const FiniteGroup& g, const GroupMap& phi) {
  Subset z = center(g);
  for (Element x = 0; x < g.order(); ++x)
    if (!z.contains(g.mul(g.inv(x), phi(x)))) return false;
  return true;
}

GroupMap induced_on_quotient(const FiniteGroup& g, const GroupMap& phi, const Quotient& q) {
  const auto k = q.group.order();
  constexpr Element unset = ~Element{0};
  std::vector<Element> t(k, unset);
  for (Element x = 0; x < g.order(); ++x) {
    Element v = q.projection[phi(x)];
    Element& slot = t[q.projection[x]];
    if (slot == unset) {
      slot = v;
    } else if (slot != v) {
      throw std::invalid_argument("induced_on_quotient: subgroup is not invariant");
    }
  }
  return GroupMap::from_table(q.group, std::move(t));
}

GroupMap restrict_to(const FiniteGroup& g, const GroupMap& phi, const SubgroupView& s) {
  (void)g;
  std::map<Element, Element> index;
  for (std::size_t i = 0; i < s.embedding.size(); ++i)
    index[s.embedding[i]] = static_cast<Element>(i);
  std::vector<Element> t;
  for (Element parent : s.embedding) {
    auto it = index.find(phi(parent));
    if (it == index.end()) throw std::invalid_argument("restrict_to: subgroup is not invariant");
    t.push_back(it->second);
  }
  return GroupMap::from_table(s.group, std::move(t));
}

AutGroup aut_group(const FiniteGroup& g) {
  auto auts = automorphisms(g);
  auto id = identity_map(g);
  auto it = std::find(auts.begin(), auts.end(), id);
  std::rotate(auts.begin(), it, it + 1);
  std::map<GroupMap, Element> index;
  for (std::size_t i = 0; i < auts.size(); ++i) index.emplace(auts[i], static_cast<Element>(i));
  const auto n = auts.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(auts[a], auts[b]));
  std::vector<std::string> labels;
  FiniteGroup::Presentation pres;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(map_to_string(g, auts[i]));
    if (i != 0) {
      pres.generators.push_back(static_cast<Element>(i));
      pres.generator_names.push_back("t" + std::to_string(i));
    }
  }
  FiniteGroup group("Aut(" + g.name() + ")", std::move(table), std::move(labels), std::move(pres));
  return AutGroup{std::move(group), std::move(auts)};
}

std::vector<EndoOrbit> endo_orbit_census(const std::vector<GroupMap>& endos,
                                         const std::vector<GroupMap>& auts) {
  std::map<GroupMap, std::size_t> index;
  for (std::size_t i = 0; i < endos.size(); ++i) index.emplace(endos[i], i);
  std::vector<char> seen(endos.size(), 0);
  std::vector<EndoOrbit> orbits;
  for (std::size_t i = 0; i < endos.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> members;
    for (const auto& theta : auts) {
      std::size_t j = index.at(conjugate_map(endos[i], theta));
      if (!seen[j]) {
        seen[j] = 1;
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    orbits.push_back(EndoOrbit{std::move(members), endos[i].is_automorphism()});
  }
  return orbits;
}

std::vector<EndoOrbit> endo_orbit_census(const FiniteGroup& g) {
  auto endos = enumerate_homomorphisms(g);
  std::vector<GroupMap> auts;
  for (const auto& m : endos)
    if (m.is_automorphism()) auts.push_back(m);
  return endo_orbit_census(endos, auts);
}

std::string map_to_string(const FiniteGroup& g, const GroupMap& phi) {
  std::string out;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    if (i) out += ", ";
    out += std::string(g.generator_names()[i]) + "->" + g.label(phi(g.generators()[i]));
  }
  return out;
}

GroupMap parse_map(const FiniteGroup& g, std::string_view text) {
  const auto k = g.generators().size();
  std::vector<std::optional<Element>> images(k);
  // Split on commas that are not inside brackets or parentheses.
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && (text[i] == '[' || text[i] == '(')) ++depth;
    if (i < text.size() && (text[i] == ']' || text[i] == ')')) --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  for (auto part : parts) {
    auto arrow = part.find("->");
    if (arrow == std::string_view::npos)
      throw std::invalid_argument("map entry without '->': " + std::string(part));
    auto name = trim(part.substr(0, arrow));
    auto gi = g.generator_index(name);
    if (!gi) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
    if (images[*gi]) throw std::invalid_argument("generator mapped twice: " + std::string(name));
    images[*gi] = parse_element(g, trim(part.substr(arrow + 2)));
  }
  std::vector<Element> ims;
  for (std::size_t i = 0; i < k; ++i) {
    if (!images[i])
      throw std::invalid_argument("no image for generator " + std::string(g.generator_names()[i]));
    ims.push_back(*images[i]);
  }
  auto ext = from_generator_images(g, ims);
  if (!ext) throw std::invalid_argument("invalid map: " + ext.rejection);
  return std::move(*ext.map);
}

}  // namespace tcc
