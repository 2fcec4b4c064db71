#include "tcc/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tcc {

Subset::Subset(std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subset::contains(Element e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

bool Subset::includes(const Subset& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

Subset Subset::intersect(const Subset& other) const {
  std::vector<Element> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  return Subset(std::move(out));
}

Subset Subset::unite(const Subset& other) const {
  std::vector<Element> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return Subset(std::move(out));
}

FiniteGroup::FiniteGroup(std::string name, std::vector<Element> table,
                         std::vector<std::string> labels, Presentation presentation)
    : name_(std::move(name)),
      order_(labels.size()),
      table_(std::move(table)),
      labels_(std::move(labels)),
      presentation_(std::move(presentation)) {
  if (order_ == 0 || order_ > kMaxGroupOrder)
    throw std::invalid_argument("group order out of range: " + std::to_string(order_));
  if (table_.size() != order_ * order_)
    throw std::invalid_argument("multiplication table has wrong size");
  if (presentation_.generator_names.size() != presentation_.generators.size())
    throw std::invalid_argument("one name per generator required");
  validate();
}

void FiniteGroup::validate() {
  const auto n = order_;
  for (Element v : table_)
    if (v >= n) throw std::invalid_argument("table entry out of range");
  for (Element g = 0; g < n; ++g)
    if (mul(0, g) != g || mul(g, 0) != g)
      throw std::invalid_argument("element 0 is not the identity");

  // Every row must be a permutation, which also yields inverses.
  auto& inverse = inverse_;
  inverse.assign(n, 0);
  std::vector<char> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    bool found = false;
    for (Element b = 0; b < n; ++b) {
      Element p = mul(a, b);
      if (seen[p]) throw std::invalid_argument("table row is not a permutation");
      seen[p] = 1;
      if (p == 0) {
        inverse[a] = b;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("element without inverse");
  }
  for (Element a = 0; a < n; ++a)
    if (mul(inverse[a], a) != 0) throw std::invalid_argument("left and right inverses differ");

  auto assoc = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw std::invalid_argument("multiplication is not associative");
  };
  if (n <= 64) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < 100000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }

  for (Element g : presentation_.generators)
    if (g >= n) throw std::invalid_argument("generator out of range");
  for (const auto& w : presentation_.relators)
    for (const auto& l : w)
      if (l.generator >= presentation_.generators.size() ||
          (l.exponent != 1 && l.exponent != -1))
        throw std::invalid_argument("relator uses an invalid letter");

  Subset gen(std::vector<Element>(presentation_.generators.begin(),
                                  presentation_.generators.end()));
  if (closure(*this, gen).size() != n)
    throw std::invalid_argument("generators do not generate the group");
  for (const auto& w : presentation_.relators)
    if (evaluate(w) != 0)
      throw std::invalid_argument("relator " + word_to_string(w) + " is not satisfied");
}

Element FiniteGroup::power(Element a, long long k) const {
  Element base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Element result = 0;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element FiniteGroup::commutator(Element x, Element y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element p = a; p != 0; p = mul(p, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element g : presentation_.generators)
    for (Element h : presentation_.generators)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

std::optional<std::size_t> FiniteGroup::generator_index(std::string_view name) const {
  const auto& names = presentation_.generator_names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

Element FiniteGroup::evaluate(const Word& w) const {
  return evaluate(w, presentation_.generators);
}

Element FiniteGroup::evaluate(const Word& w, std::span<const Element> images) const {
  Element r = 0;
  for (const auto& l : w) {
    Element g = images[l.generator];
    r = mul(r, l.exponent > 0 ? g : inv(g));
  }
  return r;
}

std::string FiniteGroup::word_to_string(const Word& w) const {
  if (w.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w) {
    if (!first) os << ' ';
    first = false;
    os << presentation_.generator_names[l.generator];
    if (l.exponent < 0) os << "^-1";
  }
  return os.str();
}

std::optional<Element> FiniteGroup::find_label(std::string_view text) const {
  for (Element e = 0; e < order_; ++e)
    if (labels_[e] == text) return e;
  return std::nullopt;
}

std::vector<std::string> FiniteGroup::labels_of(const Subset& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Element e : s) out.push_back(labels_[e]);
  return out;
}

Subset FiniteGroup::all() const {
  std::vector<Element> v(order_);
  for (Element e = 0; e < order_; ++e) v[e] = e;
  return Subset(std::move(v));
}

Element commutator(const FiniteGroup& g, Element x, Element y) {
  return g.commutator(x, y);
}

Subset closure(const FiniteGroup& g, const Subset& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = 1;
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    Element a = queue.front();
    queue.pop_front();
    for (Element s : seed) {
      Element p = g.mul(a, s);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
        queue.push_back(p);
      }
    }
  }
  return Subset(std::move(members));
}

SubgroupTest is_subgroup(const FiniteGroup& g, const Subset& s) {
  SubgroupTest t;
  if (s.empty()) return t;
  for (Element a : s)
    if (!s.contains(g.inv(a))) {
      t.inverse_witness = a;
      return t;
    }
  for (Element a : s)
    for (Element b : s)
      if (!s.contains(g.mul(a, b))) {
        t.product_witness = std::make_pair(a, b);
        return t;
      }
  t.is_subgroup = true;
  return t;
}

bool is_normal(const FiniteGroup& g, const Subset& s) {
  if (!is_subgroup(g, s)) throw std::invalid_argument("is_normal: set is not a subgroup");
  for (Element x = 0; x < g.order(); ++x)
    for (Element a : s)
      if (!s.contains(g.conj(a, x))) return false;
  return true;
}

Subset center(const FiniteGroup& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element gen : g.generators())
      if (g.mul(a, gen) != g.mul(gen, a)) {
        central = false;
        break;
      }
    if (central) z.push_back(a);
  }
  return Subset(std::move(z));
}

Subset derived_subgroup(const FiniteGroup& g) {
  std::vector<Element> comms;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) comms.push_back(g.commutator(x, y));
  return closure(g, Subset(std::move(comms)));
}

Subset centralizer(const FiniteGroup& g, Element x) {
  std::vector<Element> c;
  for (Element a = 0; a < g.order(); ++a)
    if (g.mul(a, x) == g.mul(x, a)) c.push_back(a);
  return Subset(std::move(c));
}

Subset conjugacy_class(const FiniteGroup& g, Element x) {
  std::vector<Element> c;
  for (Element z = 0; z < g.order(); ++z) c.push_back(g.conj(x, z));
  return Subset(std::move(c));
}

std::vector<Subset> conjugacy_classes(const FiniteGroup& g) {
  std::vector<Subset> classes;
  std::vector<char> seen(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    Subset c = conjugacy_class(g, x);
    for (Element y : c) seen[y] = 1;
    classes.push_back(std::move(c));
  }
  return classes;
}

std::vector<Element> class_representatives(const FiniteGroup& g) {
  std::vector<Element> reps;
  for (const auto& c : conjugacy_classes(g)) reps.push_back(c.front());
  return reps;
}

Quotient quotient(const FiniteGroup& g, const Subset& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("quotient: subgroup is not normal");
  const auto order = g.order();
  std::vector<Element> coset_of(order, 0);
  std::vector<Element> reps;
  std::vector<char> done(order, 0);
  for (Element a = 0; a < order; ++a) {
    if (done[a]) continue;
    auto id = static_cast<Element>(reps.size());
    reps.push_back(a);
    for (Element m : n) {
      Element b = g.mul(a, m);
      done[b] = 1;
      coset_of[b] = id;
    }
  }
  const auto k = reps.size();
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = coset_of[g.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  for (Element r : reps) labels.push_back(r == 0 ? g.label(0) : g.label(r) + "N");
  FiniteGroup::Presentation pres;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    pres.generators.push_back(coset_of[g.generators()[i]]);
    pres.generator_names.push_back(std::string(g.generator_names()[i]));
  }
  FiniteGroup q(g.name() + "/N", std::move(table), std::move(labels), std::move(pres));
  return Quotient{std::move(q), std::move(coset_of)};
}

SubgroupView subgroup_group(const FiniteGroup& g, const Subset& s) {
  if (!is_subgroup(g, s)) throw std::invalid_argument("subgroup_group: not a subgroup");
  std::vector<Element> emb(s.begin(), s.end());  // identity first since id 0
  std::map<Element, Element> index;
  for (std::size_t i = 0; i < emb.size(); ++i) index[emb[i]] = static_cast<Element>(i);
  const auto k = emb.size();
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = index.at(g.mul(emb[i], emb[j]));
  std::vector<std::string> labels;
  FiniteGroup::Presentation pres;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(g.label(emb[i]));
    if (i != 0) {
      pres.generators.push_back(static_cast<Element>(i));
      pres.generator_names.push_back(g.label(emb[i]));
    }
  }
  FiniteGroup sub(g.name() + "<sub>", std::move(table), std::move(labels), std::move(pres));
  return SubgroupView{std::move(sub), std::move(emb)};
}

std::vector<Subset> upper_central_series(const FiniteGroup& g) {
  std::vector<Subset> series{Subset::single(g.identity())};
  while (true) {
    const Subset& prev = series.back();
    std::vector<Element> next;
    for (Element a = 0; a < g.order(); ++a) {
      bool ok = true;
      for (Element x = 0; x < g.order() && ok; ++x)
        ok = prev.contains(g.commutator(a, x));
      if (ok) next.push_back(a);
    }
    Subset s(std::move(next));
    if (s.size() == prev.size()) break;
    series.push_back(std::move(s));
  }
  return series;
}

Nilpotency is_nilpotent(const FiniteGroup& g) {
  auto series = upper_central_series(g);
  if (series.back().size() != g.order()) return {false, 0};
  return {true, series.size() - 1};
}

std::vector<Subset> normal_subgroups(const FiniteGroup& g) {
  auto classes = conjugacy_classes(g);
  std::set<Subset> found{Subset::single(g.identity())};
  std::deque<Subset> queue{Subset::single(g.identity())};
  while (!queue.empty()) {
    Subset n = queue.front();
    queue.pop_front();
    for (const auto& c : classes) {
      if (n.contains(c.front())) continue;
      Subset m = closure(g, n.unite(c));
      if (found.insert(m).second) queue.push_back(std::move(m));
    }
  }
  std::vector<Subset> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Subset& a, const Subset& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Subset> maximal_normal_subgroups(const FiniteGroup& g) {
  auto all = normal_subgroups(g);
  std::vector<Subset> proper;
  for (auto& n : all)
    if (n.size() != g.order()) proper.push_back(n);
  std::vector<Subset> maximal;
  for (const auto& n : proper) {
    bool is_max = true;
    for (const auto& m : proper)
      if (m.size() > n.size() && m.includes(n)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(n);
  }
  return maximal;
}

bool is_simple(const FiniteGroup& g) {
  return g.order() > 1 && normal_subgroups(g).size() == 2;
}

bool is_cyclic(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    if (g.element_order(a) == g.order()) return true;
  return false;
}

}  // namespace tcc
