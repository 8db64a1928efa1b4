#include "nsalg/split.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsalg {

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Dendriform: return "dendriform";
    case SchemeKind::Tridendriform: return "tridendriform";
    case SchemeKind::NS: return "ns";
  }
  return "?";
}

std::vector<OpSymbol> SplitScheme::star_summands() const {
  std::vector<OpSymbol> out;
  for (const auto& r : rules[0][0]) {
    if (r.out_degree == 0) out.push_back(r.op);
  }
  return out;
}

SplitScheme make_scheme(SchemeKind kind) {
  SplitScheme s;
  s.kind = kind;
  s.name = std::string(to_string(kind));
  s.rules[0][1] = {{ops::succ, 1}};
  s.rules[1][0] = {{ops::prec, 1}};
  switch (kind) {
    case SchemeKind::Dendriform:
      s.alphabet = {ops::prec, ops::succ};
      s.rules[0][0] = {{ops::prec, 0}, {ops::succ, 0}};
      break;
    case SchemeKind::Tridendriform:
      s.alphabet = {ops::prec, ops::succ, ops::dot};
      s.rules[0][0] = {{ops::prec, 0}, {ops::succ, 0}, {ops::dot, 0}};
      s.rules[1][1] = {{ops::dot, 1}};
      break;
    case SchemeKind::NS:
      s.alphabet = {ops::prec, ops::succ, ops::vee};
      s.rules[0][0] = {{ops::prec, 0}, {ops::succ, 0}, {ops::vee, 0}};
      break;
  }
  return s;
}

SplitScheme parse_scheme(std::string_view name) {
  for (auto kind : {SchemeKind::NS, SchemeKind::Dendriform, SchemeKind::Tridendriform}) {
    if (to_string(kind) == name) return make_scheme(kind);
  }
  fail(ErrorCode::UnsupportedScheme, "unknown splitting scheme '" + std::string(name) + "'");
}

SplitScheme cocycle_scheme(const OpSymbol& h) {
  SplitScheme s = make_scheme(SchemeKind::NS);
  s.name = "ns*" + h.name;
  s.rules[0][0].push_back({h, 1});
  return s;
}

GradedExpr graded_product(const SplitScheme& scheme, const GradedExpr& x, const GradedExpr& y) {
  GradedExpr out;
  for (int g = 0; g < 2; ++g) {
    for (int h = 0; h < 2; ++h) {
      const auto& rules = scheme.rules[g][h];
      if (rules.empty() || x.part[g].empty() || y.part[h].empty()) continue;
      for (const auto& rule : rules) {
        auto& target = out.part[rule.out_degree];
        for (const auto& [ml, cl] : x.part[g]) {
          for (const auto& [mr, cr] : y.part[h]) {
            Rat& slot = target[Monomial::node(rule.op, ml, mr)];
            slot += cl * cr;
          }
        }
      }
    }
  }
  for (auto& part : out.part) std::erase_if(part, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

GradedExpr evaluate_graded(const Monomial& m, const SplitScheme& scheme, std::span<const int> degrees) {
  if (m.is_leaf()) {
    GradedExpr e;
    std::uint32_t l = m.label();
    if (l > degrees.size()) fail(ErrorCode::ArityMismatch, "no degree given for leaf " + std::to_string(l));
    e.part[degrees[l - 1]][m] = 1;
    return e;
  }
  return graded_product(scheme, evaluate_graded(m.left(), scheme, degrees),
                        evaluate_graded(m.right(), scheme, degrees));
}

Relation graded_component(const Relation& rel, const SplitScheme& scheme, std::span<const int> degrees,
                          int degree) {
  Relation out{rel.arity, {}};
  for (const auto& t : rel.terms) {
    GradedExpr e = evaluate_graded(t.mono, scheme, degrees);
    for (const auto& [m, c] : e.part[degree]) out.terms.push_back(Term{t.coeff * c, m});
  }
  return canon(out);
}

namespace {

void require_arity(const Relation& rel) {
  if (rel.arity < 2 || rel.arity > 6) {
    fail(ErrorCode::ArityOutOfRange,
         "relation " + render_text(rel) + " has arity " + std::to_string(rel.arity) + "; supported range is 2..6");
  }
}

// All subsets of {1..n}, by size and then lexicographically.
std::vector<std::vector<std::uint32_t>> subsets(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) s.push_back(i + 1);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Relation zero_relation(std::size_t arity) { return Relation{arity, {}}; }

SplitRelations derive_one(const Relation& rel, const SplitScheme& scheme) {
  require_arity(rel);
  SplitRelations out;
  out.source = rel;
  const bool vanishing_above_one = scheme.kind != SchemeKind::Tridendriform;
  Relation star = zero_relation(rel.arity);
  Relation singles = zero_relation(rel.arity);

  for (const auto& subset : subsets(rel.arity)) {
    std::vector<int> degrees(rel.arity, 0);
    for (auto l : subset) degrees[l - 1] = 1;
    Relation low = graded_component(rel, scheme, degrees, 0);
    Relation high = graded_component(rel, scheme, degrees, 1);

    if (subset.empty()) {
      if (!high.is_zero()) throw std::logic_error("degree-0 inputs produced a degree-1 term");
      star = low;
      continue;
    }
    if (!low.is_zero()) throw std::logic_error("degree-1 input produced a degree-0 term");
    if (subset.size() >= 2 && vanishing_above_one && !high.is_zero()) {
      throw std::logic_error("two degree-1 inputs gave a nonzero result under the " + scheme.name + " scheme");
    }
    if (subset.size() == 1) singles = singles + high;
    if (high.is_zero()) continue;
    out.all.push_back({subset, high});
    bool dup = std::any_of(out.derived.begin(), out.derived.end(),
                           [&](const DerivedRelation& d) { return equivalent_up_to_relabeling(d.relation, high); });
    if (!dup) out.derived.push_back({subset, high});
  }

  if (scheme.kind != SchemeKind::Dendriform) out.star = star;
  if (scheme.kind == SchemeKind::NS) out.extra = star - singles;
  return out;
}

}  // namespace

std::vector<Relation> SplitRelationSet::relations() const {
  std::vector<Relation> out;
  for (const auto& pr : per_relation) {
    for (const auto& d : pr.derived) out.push_back(d.relation);
    if (pr.extra && !pr.extra->is_zero()) out.push_back(*pr.extra);
  }
  return out;
}

SplitRelationSet derive_split_relations(const CategoryPresentation& cat, const SplitScheme& scheme) {
  SplitRelationSet out{cat, scheme, {}};
  for (const auto& rel : cat.relations) out.per_relation.push_back(derive_one(rel, scheme));
  return out;
}

std::vector<Relation> derive_extra_via_alt_formula(const CategoryPresentation& cat) {
  const SplitScheme twisted = cocycle_scheme(ops::vee);
  std::vector<Relation> out;
  for (const auto& rel : cat.relations) {
    require_arity(rel);
    std::vector<int> degrees(rel.arity, 0);
    out.push_back(graded_component(rel, twisted, degrees, 1));
  }
  return out;
}

namespace {

std::pair<int, Monomial> vee_normal(const Monomial& m) {
  if (m.is_leaf()) return {1, m};
  auto [sl, l] = vee_normal(m.left());
  auto [sr, r] = vee_normal(m.right());
  if (m.op() == ops::vee && r < l) return {-sl * sr, Monomial::node(m.op(), r, l)};
  return {sl * sr, Monomial::node(m.op(), l, r)};
}

}  // namespace

Relation vee_normal_form(const Relation& rel) {
  Relation out{rel.arity, {}};
  for (const auto& t : rel.terms) {
    auto [sign, m] = vee_normal(t.mono);
    out.terms.push_back(Term{Rat(sign) * t.coeff, std::move(m)});
  }
  return canon(out);
}

std::vector<Relation> reduce_anticommutative(const SplitRelationSet& rels) {
  const OpSymbol& op = rels.source.op;
  const Relation anti = canon(Relation{2,
                                       {Term{1, Monomial::node(op, Monomial::leaf(1), Monomial::leaf(2))},
                                        Term{1, Monomial::node(op, Monomial::leaf(2), Monomial::leaf(1))}}});
  bool has_anti = std::any_of(rels.source.relations.begin(), rels.source.relations.end(),
                              [&](const Relation& r) { return relations_equal_up_to_scalar(r, anti); });
  if (!has_anti) {
    fail(ErrorCode::NotAnticommutative, "presentation '" + rels.source.name + "' does not contain " + render_text(anti));
  }

  const OpRewrite to_times_succ[] = {{Rat(1), ops::times, false}};
  const OpRewrite to_times_prec[] = {{Rat(-1), ops::times, true}};
  std::vector<Relation> out;
  auto consider = [&](const Relation& r) {
    Relation raw = substitute_op(substitute_op(r, ops::succ, to_times_succ), ops::prec, to_times_prec);
    Relation normal = vee_normal_form(raw);
    // A relation that only states vee-anticommutativity is kept as written.
    Relation kept = normal.is_zero() ? raw : normal;
    if (kept.is_zero()) return;
    bool dup = std::any_of(out.begin(), out.end(),
                           [&](const Relation& q) { return equivalent_up_to_relabeling(q, kept); });
    if (!dup) out.push_back(std::move(kept));
  };
  for (const auto& pr : rels.per_relation) {
    for (const auto& d : pr.derived) consider(d.relation);
    if (pr.extra) consider(*pr.extra);
  }
  return out;
}

Relation expand_star(const Relation& rel, const SplitScheme& scheme) {
  std::vector<OpRewrite> rewrites;
  for (const auto& op : scheme.star_summands()) rewrites.push_back({Rat(1), op, false});
  return substitute_op(rel, ops::star, rewrites);
}

Relation fold_star(const Relation& rel, const SplitScheme& scheme) {
  const std::vector<OpSymbol> summands = scheme.star_summands();
  LinComb terms;
  for (const auto& t : rel.terms) terms[t.mono] += t.coeff;

  auto try_fold = [&]() {
    for (const auto& [key, value] : terms) {
      const Monomial m = key;  // copied: the entry may be erased below
      const Rat c = value;
      const auto tokens = m.tokens();
      for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
        if (tokens[pos].is_leaf()) continue;
        if (std::find(summands.begin(), summands.end(), tokens[pos].op) == summands.end()) continue;
        bool complete = std::all_of(summands.begin(), summands.end(), [&](const OpSymbol& s) {
          auto it = terms.find(m.with_op_at(pos, s));
          return it != terms.end() && it->second == c;
        });
        if (!complete) continue;
        Monomial folded = m.with_op_at(pos, ops::star);
        for (const auto& s : summands) terms.erase(m.with_op_at(pos, s));
        terms[folded] += c;
        return true;
      }
    }
    return false;
  };
  while (try_fold()) {
  }

  Relation out{rel.arity, {}};
  for (const auto& [m, c] : terms) out.terms.push_back(Term{c, m});
  return canon(out);
}

}  // namespace nsalg
