#include "tcc/twisted.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

#include "tcc/perm.hpp"

namespace tcc {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::holds:
      return "holds";
    case Outcome::fails:
      return "fails";
    case Outcome::inapplicable:
      return "inapplicable";
  }
  return "?";
}

std::string_view to_string(SeriesReport::Terminal t) {
  switch (t) {
    case SeriesReport::Terminal::reached_trivial:
      return "reached-trivial";
    case SeriesReport::Terminal::class_not_subgroup:
      return "class-not-subgroup";
    case SeriesReport::Terminal::chooser_exhausted:
      return "chooser-exhausted";
  }
  return "?";
}

std::size_t TwistedPartition::class_of(Element x) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].members.contains(x)) return i;
  throw std::out_of_range("element not covered by partition");
}

Element displacement(const FiniteGroup& g, const GroupMap& phi, Element z) {
  return g.mul(g.inv(z), phi(z));
}

TwistedClass twisted_class(const FiniteGroup& g, const GroupMap& phi, Element x) {
  std::vector<Element> members;
  members.reserve(g.order());
  for (Element z = 0; z < g.order(); ++z) members.push_back(g.mul(g.mul(g.inv(z), x), phi(z)));
  return TwistedClass{x, Subset(std::move(members))};
}

Subset unit_class(const FiniteGroup& g, const GroupMap& phi) {
  return twisted_class(g, phi, g.identity()).members;
}

Subset inner_unit_class(const FiniteGroup& g, Element h) {
  std::vector<Element> members;
  for (Element z = 0; z < g.order(); ++z) members.push_back(g.commutator(z, h));
  return Subset(std::move(members));
}

TwistedPartition twisted_partition(const FiniteGroup& g, const GroupMap& phi) {
  std::vector<Element> parent(g.order());
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&](Element a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Element x = 0; x < g.order(); ++x)
    for (Element z = 0; z < g.order(); ++z) {
      Element a = find(x);
      Element b = find(g.mul(g.mul(g.inv(z), x), phi(z)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<Element, std::vector<Element>> groups;
  for (Element x = 0; x < g.order(); ++x) groups[find(x)].push_back(x);
  TwistedPartition p;
  for (auto& [root, members] : groups) {
    Subset s(std::move(members));
    p.classes.push_back(TwistedClass{s.front(), std::move(s)});
  }
  std::sort(p.classes.begin(), p.classes.end(),
            [](const TwistedClass& a, const TwistedClass& b) { return a.representative < b.representative; });
  return p;
}

UnitClassReport unit_class_subgroup_report(const FiniteGroup& g, const GroupMap& phi) {
  UnitClassReport r;
  r.unit_class = unit_class(g, phi);
  r.subgroup = is_subgroup(g, r.unit_class);
  if (r.subgroup) {
    r.normal = is_normal(g, r.unit_class);
    if (!r.normal) throw std::logic_error("unit class is a subgroup but not normal");
    r.index = g.order() / r.unit_class.size();
  }
  return r;
}

bool prop4_identity(const FiniteGroup& g, Element x, Element h) {
  Subset lhs = twisted_class(g, inner_automorphism(g, h), x).members;
  std::vector<Element> rhs;
  for (Element c : conjugacy_class(g, g.mul(x, g.inv(h)))) rhs.push_back(g.mul(c, h));
  return lhs == Subset(std::move(rhs));
}

bool corollary1_identity(const FiniteGroup& g, Element x, Element h) {
  auto size = twisted_class(g, inner_automorphism(g, h), x).members.size();
  return size * centralizer(g, g.mul(x, g.inv(h))).size() == g.order();
}

bool lemma1_check(const FiniteGroup& g, Element h) {
  if (h == g.identity()) throw std::invalid_argument("lemma1_check: h must not be e");
  return !inner_unit_class(g, h).contains(h);
}

bool robinson_criterion(const FiniteGroup& g, Element h) {
  return !closure(g, inner_unit_class(g, h)).contains(h);
}

Chooser smallest_element_chooser() {
  return [](const FiniteGroup& g, const Subset& current, std::size_t) -> std::optional<Element> {
    for (Element e : current)
      if (e != g.identity()) return e;
    return std::nullopt;
  };
}

Chooser starting_with(Element first) {
  auto fallback = smallest_element_chooser();
  return [first, fallback](const FiniteGroup& g, const Subset& current,
                           std::size_t step) -> std::optional<Element> {
    if (step == 0) return first;
    return fallback(g, current, step);
  };
}

SeriesReport theorem2_series(const FiniteGroup& g, const Chooser& chooser) {
  SeriesReport r;
  r.chain.push_back(g.all());
  for (std::size_t step = 0;; ++step) {
    const Subset current = r.chain.back();
    auto h = chooser(g, current, step);
    if (!h || *h == g.identity()) {
      r.terminal = SeriesReport::Terminal::chooser_exhausted;
      return r;
    }
    if (!current.contains(*h)) throw std::invalid_argument("chooser picked an element outside the chain");
    r.trace.push_back(*h);
    Subset next = inner_unit_class(g, *h);
    if (!is_subgroup(g, next)) {
      r.terminal = SeriesReport::Terminal::class_not_subgroup;
      r.failed_step = step;
      return r;
    }
    r.all_normal = r.all_normal && is_normal(g, next);
    r.strictly_descending =
        r.strictly_descending && current.includes(next) && next.size() < current.size();
    r.chain.push_back(next);
    if (next.size() == 1) {
      r.terminal = SeriesReport::Terminal::reached_trivial;
      r.central_element = *h;
      r.central_certified = center(g).contains(*h);
      return r;
    }
  }
}

bool prop7_check(const FiniteGroup& g, Element h) {
  Subset e = inner_unit_class(g, h);
  if (!is_subgroup(g, e)) throw std::invalid_argument("prop7_check: [e]_h is not a subgroup");
  Quotient q = quotient(g, e);
  Element coset = q.projection[h];
  return coset != q.group.identity() && center(q.group).contains(coset);
}

bool prop3_inclusion(const FiniteGroup& g, const GroupMap& phi, const GroupMap& psi) {
  Subset a = unit_class(g, phi);
  Subset b = unit_class(g, psi);
  if (!is_subgroup(g, a) || !is_subgroup(g, b))
    throw std::invalid_argument("prop3_inclusion: unit classes must be subgroups");
  std::vector<Element> prod;
  for (Element x : a)
    for (Element y : b) prod.push_back(g.mul(x, y));
  return Subset(std::move(prod)).includes(unit_class(g, compose(phi, psi)));
}

bool prop2_conjugation(const FiniteGroup& g, const GroupMap& phi, const GroupMap& theta) {
  std::vector<Element> image;
  for (Element x : unit_class(g, phi)) image.push_back(theta(x));
  return Subset(std::move(image)) == unit_class(g, conjugate_map(phi, theta));
}

Subset unit_class_intersection(const FiniteGroup& g, const std::vector<GroupMap>& auts) {
  Subset acc = g.all();
  for (const auto& psi : auts) acc = acc.intersect(unit_class(g, psi));
  return acc;
}

bool is_invariant(const Subset& s, const std::vector<GroupMap>& auts) {
  for (const auto& theta : auts) {
    std::vector<Element> image;
    for (Element x : s) image.push_back(theta(x));
    if (Subset(std::move(image)) != s) return false;
  }
  return true;
}

bool all_inner_unit_classes_subgroups(const FiniteGroup& g) {
  for (Element h : class_representatives(g))
    if (!is_subgroup(g, inner_unit_class(g, h))) return false;
  return true;
}

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Outcome prop6_check(const FiniteGroup& g) {
  if (!all_inner_unit_classes_subgroups(g)) return Outcome::inapplicable;
  for (const auto& n : maximal_normal_subgroups(g)) {
    Quotient q = quotient(g, n);
    if (!is_prime(q.group.order()) || !is_cyclic(q.group)) return Outcome::fails;
  }
  return Outcome::holds;
}

Outcome prop8_check(const FiniteGroup& g) {
  if (!all_inner_unit_classes_subgroups(g)) return Outcome::inapplicable;
  for (Element h = 0; h < g.order(); ++h) {
    Subset e = inner_unit_class(g, h);
    if (e.size() == 1) continue;
    if (!quotient(g, e).group.is_abelian()) return Outcome::inapplicable;
  }
  return center(g).includes(derived_subgroup(g)) ? Outcome::holds : Outcome::fails;
}

Outcome prop5_check(const FiniteGroup& g) {
  if (!all_inner_unit_classes_subgroups(g)) return Outcome::inapplicable;
  for (const auto& n : normal_subgroups(g))
    if (!all_inner_unit_classes_subgroups(quotient(g, n).group)) return Outcome::fails;
  return Outcome::holds;
}

Outcome prop12_check(const FiniteGroup& g, const GroupMap& phi) {
  if (!is_central_morphism(g, phi)) return Outcome::inapplicable;
  Subset e = unit_class(g, phi);
  return is_subgroup(g, e) && center(g).includes(e) ? Outcome::holds : Outcome::fails;
}

struct OuterWord::Node {
  std::size_t index = 0;  // leaf when left is null
  std::shared_ptr<const Node> left, right;
};

OuterWord OuterWord::variable(std::size_t index) {
  if (index == 0) throw std::invalid_argument("outer word variables are numbered from 1");
  auto n = std::make_shared<Node>();
  n->index = index;
  return OuterWord(std::move(n));
}

OuterWord OuterWord::bracket(OuterWord left, OuterWord right) {
  auto n = std::make_shared<Node>();
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return OuterWord(std::move(n));
}

bool OuterWord::is_variable() const { return node_->left == nullptr; }

void OuterWord::collect_leaves(std::vector<std::size_t>& out) const {
  if (is_variable()) {
    out.push_back(node_->index);
    return;
  }
  OuterWord(node_->left).collect_leaves(out);
  OuterWord(node_->right).collect_leaves(out);
}

std::size_t OuterWord::arity() const {
  std::vector<std::size_t> leaves;
  collect_leaves(leaves);
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i] != i + 1) throw std::invalid_argument("outer word leaves must be 1..n, each once");
  return leaves.size();
}

std::string OuterWord::to_string() const {
  if (is_variable()) return "x" + std::to_string(node_->index);
  return "[" + OuterWord(node_->left).to_string() + "," + OuterWord(node_->right).to_string() + "]";
}

Element OuterWord::evaluate(const FiniteGroup& g, const std::vector<Element>& values) const {
  if (is_variable()) return values.at(node_->index - 1);
  return g.commutator(OuterWord(node_->left).evaluate(g, values),
                      OuterWord(node_->right).evaluate(g, values));
}

OuterWord OuterWord::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::function<OuterWord()> term = [&]() -> OuterWord {
    skip();
    if (pos >= text.size()) throw std::invalid_argument("truncated outer word");
    if (text[pos] == '[') {
      ++pos;
      OuterWord left = term();
      skip();
      if (pos >= text.size() || text[pos] != ',') throw std::invalid_argument("expected ','");
      ++pos;
      OuterWord right = term();
      skip();
      if (pos >= text.size() || text[pos] != ']') throw std::invalid_argument("expected ']'");
      ++pos;
      return bracket(std::move(left), std::move(right));
    }
    if (text[pos] == 'x') ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected a variable index");
    return variable(std::stoul(std::string(text.substr(start, pos - start))));
  };
  OuterWord w = term();
  skip();
  if (pos != text.size()) throw std::invalid_argument("trailing text after outer word");
  w.arity();
  return w;
}

Element eval_outer_word(const FiniteGroup& g, const OuterWord& w, const std::vector<Element>& values) {
  if (w.arity() != values.size()) throw std::invalid_argument("outer word arity mismatch");
  return w.evaluate(g, values);
}

bool lemma2_check(const FiniteGroup& g, const OuterWord& w, const std::vector<Element>& values) {
  Element value = eval_outer_word(g, w, values);
  Subset meet = g.all();
  for (Element gi : values) {
    Subset e = inner_unit_class(g, gi);
    if (!is_subgroup(g, e)) throw std::invalid_argument("lemma2_check: some [e]_{g_i} is not a subgroup");
    meet = meet.intersect(e);
  }
  return meet.contains(value) && meet.includes(inner_unit_class(g, value));
}

CommutatorChain prop9_chain(const FiniteGroup& g, const std::vector<Element>& values) {
  if (values.empty()) throw std::invalid_argument("prop9_chain: need at least one element");
  CommutatorChain c;
  Element a = values.front();
  c.elements.push_back(a);
  for (std::size_t i = 1; i < values.size(); ++i) {
    a = g.commutator(a, values[i]);
    c.elements.push_back(a);
  }
  const Subset z = center(g);
  for (Element x : c.elements) {
    Subset e = inner_unit_class(g, x);
    if (!is_subgroup(g, e)) throw std::invalid_argument("prop9_chain: class is not a subgroup");
    c.classes.push_back(std::move(e));
  }
  for (std::size_t i = 0; i + 1 < c.classes.size(); ++i) {
    c.inclusions_hold = c.inclusions_hold && c.classes[i].includes(c.classes[i + 1]);
    if (!z.contains(c.elements[i + 1])) {
      bool strict = c.classes[i].contains(c.elements[i + 1]) &&
                    !c.classes[i + 1].contains(c.elements[i + 1]);
      c.strict_where_noncentral = c.strict_where_noncentral && strict;
    }
  }
  return c;
}

std::size_t kukina_romankov_product(const FiniteGroup& g, const GroupMap& phi) {
  if (!is_nilpotent(g).nilpotent) throw std::invalid_argument("kukina_romankov_product: group is not nilpotent");
  if (!phi.is_automorphism()) throw std::invalid_argument("kukina_romankov_product: map is not an automorphism");
  auto series = upper_central_series(g);
  std::size_t product = 1;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    SubgroupView upper = subgroup_group(g, series[i + 1]);
    GroupMap on_upper = restrict_to(g, phi, upper);
    std::vector<Element> lower;
    for (std::size_t k = 0; k < upper.embedding.size(); ++k)
      if (series[i].contains(upper.embedding[k])) lower.push_back(static_cast<Element>(k));
    Quotient factor = quotient(upper.group, Subset(std::move(lower)));
    GroupMap induced = induced_on_quotient(upper.group, on_upper, factor);
    Subset e = unit_class(factor.group, induced);
    if (!is_subgroup(factor.group, e)) throw std::logic_error("unit class in an abelian factor is not a subgroup");
    product *= factor.group.order() / e.size();
  }
  return product;
}

InnerScan scan_all_inner(const FiniteGroup& g) {
  InnerScan s;
  for (Element h : class_representatives(g))
    if (!is_subgroup(g, inner_unit_class(g, h))) s.failures.push_back(h);
  s.all_subgroups = s.failures.empty();
  s.nilpotency = is_nilpotent(g);
  s.nilpotency_consistent = !s.all_subgroups || s.nilpotency.nilpotent;
  return s;
}

bool theorem4_scan(const FiniteGroup& g) {
  if (g.is_abelian() || !is_simple(g)) throw std::invalid_argument("theorem4_scan: group must be simple and non-abelian");
  for (Element h : class_representatives(g)) {
    if (h == g.identity()) continue;
    if (is_subgroup(g, inner_unit_class(g, h))) return false;
  }
  return true;
}

bool prop11_scan(std::size_t n) {
  if (n < 5 || n > 6) throw std::invalid_argument("prop11_scan: n must be 5 or 6");
  FiniteGroup s = symmetric_group(n);
  for (Element h : class_representatives(s)) {
    if (h == s.identity()) continue;
    if (parity(Permutation::parse(s.label(h), n)) != Parity::even) continue;
    if (is_subgroup(s, inner_unit_class(s, h))) return false;
  }
  return true;
}

}  // namespace tcc
