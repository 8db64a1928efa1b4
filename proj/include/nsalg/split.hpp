#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsalg/terms.hpp"

namespace nsalg {

enum class SchemeKind { Dendriform, Tridendriform, NS };

std::string_view to_string(SchemeKind kind);

/// One contribution of a graded product: op(x, y) placed in `out_degree`.
struct Rule {
  OpSymbol op;
  int out_degree = 0;
};

/// Product table on the doubled space A_0 + A_1. rules[g][h] lists what the
/// product of a degree-g and a degree-h element contributes.
struct SplitScheme {
  SchemeKind kind = SchemeKind::NS;
  std::string name;
  std::vector<OpSymbol> alphabet;
  std::array<std::array<std::vector<Rule>, 2>, 2> rules;

  /// Ops whose degree-0 sum is the star product.
  std::vector<OpSymbol> star_summands() const;
};

SplitScheme make_scheme(SchemeKind kind);
/// "ns", "dendriform" or "tridendriform"; UnsupportedScheme otherwise.
SplitScheme parse_scheme(std::string_view name);
/// NS table plus (h, 1) in the degree (0, 0) slot: the *_H product with H = h.
SplitScheme cocycle_scheme(const OpSymbol& h = ops::vee);

using LinComb = std::map<Monomial, Rat>;

struct GradedExpr {
  std::array<LinComb, 2> part;

  bool is_zero() const { return part[0].empty() && part[1].empty(); }
};

GradedExpr graded_product(const SplitScheme& scheme, const GradedExpr& x, const GradedExpr& y);

/// Evaluates m with every internal node read as the graded product and leaf l
/// placed in degree degrees[l - 1].
GradedExpr evaluate_graded(const Monomial& m, const SplitScheme& scheme, std::span<const int> degrees);

/// Relation whose terms are the degree-`degree` components of sum c * m.
Relation graded_component(const Relation& rel, const SplitScheme& scheme, std::span<const int> degrees,
                          int degree);

struct DerivedRelation {
  std::vector<std::uint32_t> subset;  // 1-based leaf labels placed in degree 1
  Relation relation;
};

struct SplitRelations {
  Relation source;
  /// Every nonzero derived relation, one per subset, before deduplication.
  std::vector<DerivedRelation> all;
  /// `all` with duplicates removed (up to scalar and renaming of variables).
  std::vector<DerivedRelation> derived;
  std::optional<Relation> star;
  std::optional<Relation> extra;
};

struct SplitRelationSet {
  CategoryPresentation source;
  SplitScheme scheme;
  std::vector<SplitRelations> per_relation;

  /// Deduplicated derived relations followed by the extra relation, per
  /// source relation in order.
  std::vector<Relation> relations() const;
};

SplitRelationSet derive_split_relations(const CategoryPresentation& cat, const SplitScheme& scheme);

/// Degree-1 part of each relation evaluated under *_vee on degree-0 inputs.
std::vector<Relation> derive_extra_via_alt_formula(const CategoryPresentation& cat);

/// Lie-type reduction: a>b -> a#b, a<b -> -(b#a), then vee normal form and
/// deduplication up to scalar and renaming across the whole set.
std::vector<Relation> reduce_anticommutative(const SplitRelationSet& rels);

/// Rewrites every vee node so its subtrees are in canonical order, negating
/// the coefficient per swap.
Relation vee_normal_form(const Relation& rel);

/// Replaces star nodes by the sum of the scheme's star summands.
Relation expand_star(const Relation& rel, const SplitScheme& scheme);

/// Inverse of expand_star for display: folds complete summand groups back
/// into star nodes.
Relation fold_star(const Relation& rel, const SplitScheme& scheme);

}  // namespace nsalg
