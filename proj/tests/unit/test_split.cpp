#include <gtest/gtest.h>

#include "goldens.hpp"
#include "nsalg/findim.hpp"
#include "nsalg/oracle.hpp"
#include "support.hpp"

using namespace nsalg;
using nsalg::testkit::Gen;

namespace {

std::vector<Relation> dedup(std::vector<Relation> rels) {
  std::vector<Relation> out;
  for (auto& r : rels) {
    r = canon(r);
    if (r.is_zero()) continue;
    bool seen = false;
    for (const auto& o : out) seen = seen || equivalent_up_to_relabeling(o, r);
    if (!seen) out.push_back(r);
  }
  return out;
}

bool same_sets(const std::vector<Relation>& a, const std::vector<Relation>& b) {
  auto covered = [](const std::vector<Relation>& xs, const std::vector<Relation>& ys) {
    for (const auto& x : xs) {
      bool hit = false;
      for (const auto& y : ys) hit = hit || equivalent_up_to_relabeling(x, y);
      if (!hit) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

CategoryPresentation random_presentation(Gen& g) {
  std::vector<Relation> rels;
  const std::size_t count = 1 + g.index(2);
  for (std::size_t i = 0; i < count; ++i) rels.push_back(g.relation(2 + g.index(2), {ops::mu}, 1 + g.index(4)));
  return make_presentation("random", ops::mu, rels);
}

}  // namespace

TEST(Scheme, ParsesNamesAndRejectsOthers) {
  EXPECT_EQ(parse_scheme("ns").kind, SchemeKind::NS);
  EXPECT_EQ(parse_scheme("dendriform").kind, SchemeKind::Dendriform);
  EXPECT_EQ(parse_scheme("tridendriform").kind, SchemeKind::Tridendriform);
  try {
    parse_scheme("quadri");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedScheme);
  }
  EXPECT_EQ(make_scheme(SchemeKind::Dendriform).star_summands(), (std::vector<OpSymbol>{ops::prec, ops::succ}));
}

TEST(Split, GoldensReproduced) {
  for (const auto& g : testkit::goldens()) {
    auto bad = testkit::golden_mismatches(g);
    EXPECT_TRUE(bad.empty()) << g.label << ": " << (bad.empty() ? "" : bad.front());
  }
}

TEST(Split, LieReductionReproduced) {
  auto bad = testkit::lie_mismatches();
  EXPECT_TRUE(bad.empty()) << (bad.empty() ? "" : bad.front());
}

TEST(Split, NapDendriformHasTwoRelations) {
  auto set = derive_split_relations(catalog("nap"), make_scheme(SchemeKind::Dendriform));
  EXPECT_EQ(set.relations().size(), 2u);
  EXPECT_FALSE(set.per_relation[0].star);
  EXPECT_FALSE(set.per_relation[0].extra);
}

TEST(Split, SubsetsOrderedBySizeThenLex) {
  auto set = derive_split_relations(catalog("associative"), make_scheme(SchemeKind::Tridendriform));
  const auto& all = set.per_relation[0].all;
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& a = all[i - 1].subset;
    const auto& b = all[i].subset;
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
}

TEST(Split, ArityCap) {
  Relation r = parse_relation("((((((a*b)*c)*d)*e)*f)*g)");
  auto p = make_presentation("big", ops::mu, {r});
  try {
    derive_split_relations(p, make_scheme(SchemeKind::NS));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArityOutOfRange);
  }
}

TEST(Split, EmptyPresentationGivesEmptySet) {
  auto set = derive_split_relations(make_presentation("empty", ops::mu, {}), make_scheme(SchemeKind::NS));
  EXPECT_TRUE(set.relations().empty());
}

TEST(Split, ReduceRequiresAnticommutativity) {
  auto set = derive_split_relations(catalog("associative"), make_scheme(SchemeKind::NS));
  EXPECT_THROW(reduce_anticommutative(set), Error);
}

TEST(Split, FoldStarInvertsExpansion) {
  for (const auto& name : catalog_names()) {
    for (auto kind : {SchemeKind::NS, SchemeKind::Tridendriform}) {
      auto scheme = make_scheme(kind);
      for (const auto& r : derive_split_relations(catalog(name), scheme).relations()) {
        EXPECT_EQ(canon(expand_star(fold_star(r, scheme), scheme)), r);
      }
    }
  }
}

// -- properties ---------------------------------------------------------------

TEST(SplitProperty, VeeErasureGivesDendriform) {
  Gen g;
  std::vector<CategoryPresentation> cats;
  for (const auto& n : catalog_names()) cats.push_back(catalog(n));
  for (int i = 0; i < 30; ++i) cats.push_back(random_presentation(g));
  for (const auto& cat : cats) {
    std::vector<Relation> erased;
    for (const auto& r : derive_split_relations(cat, make_scheme(SchemeKind::NS)).relations()) {
      erased.push_back(substitute_op(r, ops::vee, {}));
    }
    auto dendri = derive_split_relations(cat, make_scheme(SchemeKind::Dendriform)).relations();
    EXPECT_TRUE(same_sets(dedup(erased), dedup(dendri))) << cat.name;
  }
}

TEST(SplitProperty, StarIsExtraPlusSingletons) {
  Gen g;
  std::vector<CategoryPresentation> cats;
  for (const auto& n : catalog_names()) cats.push_back(catalog(n));
  for (int i = 0; i < 30; ++i) cats.push_back(random_presentation(g));
  for (const auto& cat : cats) {
    for (const auto& pr : derive_split_relations(cat, make_scheme(SchemeKind::NS)).per_relation) {
      ASSERT_TRUE(pr.star && pr.extra);
      Relation sum = *pr.extra;
      for (const auto& d : pr.all) {
        if (d.subset.size() == 1) sum = sum + d.relation;
      }
      EXPECT_EQ(canon(sum), *pr.star) << render_text(pr.source);
    }
  }
}

TEST(SplitProperty, TwoHighInputsVanish) {
  Gen g;
  for (auto kind : {SchemeKind::NS, SchemeKind::Dendriform}) {
    const auto scheme = make_scheme(kind);
    for (int iter = 0; iter < 300; ++iter) {
      const std::size_t n = 2 + g.index(4);
      Monomial m = g.monomial(n, {ops::mu});
      std::vector<int> degrees(n, 0);
      std::size_t high = 0;
      for (auto& d : degrees) {
        d = g.coin() ? 1 : 0;
        high += static_cast<std::size_t>(d);
      }
      if (high < 2) {
        degrees[0] = degrees[1] = 1;
      }
      EXPECT_TRUE(evaluate_graded(m, scheme, degrees).is_zero()) << render_text(m);
    }
  }
}

TEST(SplitProperty, AltFormulaMatchesExtra) {
  Gen g;
  std::vector<CategoryPresentation> cats;
  for (const auto& n : catalog_names()) cats.push_back(catalog(n));
  for (int i = 0; i < 20; ++i) cats.push_back(random_presentation(g));
  for (const auto& cat : cats) {
    auto alt = derive_extra_via_alt_formula(cat);
    auto set = derive_split_relations(cat, make_scheme(SchemeKind::NS));
    ASSERT_EQ(alt.size(), set.per_relation.size());
    for (std::size_t i = 0; i < alt.size(); ++i) {
      const Relation& extra = *set.per_relation[i].extra;
      if (extra.is_zero() || alt[i].is_zero()) {
        EXPECT_EQ(extra.is_zero(), alt[i].is_zero());
      } else {
        EXPECT_TRUE(relations_equal_up_to_scalar(alt[i], extra)) << cat.name;
      }
    }
  }
}

TEST(SplitProperty, OutputIsDeterministic) {
  for (const auto& name : catalog_names()) {
    auto a = derive_split_relations(catalog(name), make_scheme(SchemeKind::NS)).relations();
    auto b = derive_split_relations(catalog(name), make_scheme(SchemeKind::NS)).relations();
    EXPECT_EQ(a, b);
  }
}

// Symbolic NS relations, with vee read as dot, vanish on tridendriform
// algebras built from relative Rota-Baxter operators.
TEST(SplitProperty, TridendriformSatisfiesNSRelations) {
  Gen g;
  int checked = 0;
  for (const auto& ex : corpus::algebras()) {
    if (ex.categories.front() != "associative") continue;
    const auto cat = catalog("associative");
    std::vector<Relation> rels;
    const OpRewrite to_dot[] = {{1, ops::dot}};
    for (const auto& r : derive_split_relations(cat, make_scheme(SchemeKind::NS)).relations()) {
      rels.push_back(substitute_op(r, ops::vee, to_dot));
    }
    for (int iter = 0; iter < 30; ++iter) {
      const Rat lambda = g.coin() ? Rat() : g.rat(true);
      const Matrix m = testkit::rb_candidate(g, ex.algebra.dim, lambda, corpus::twilled(), ex.algebra);
      auto r = rb_operator(ex.algebra, m, lambda);
      if (!check_rb(r, lambda).passed()) continue;
      FinAlgebra tri = rb_tridendriform(r, lambda);
      EXPECT_TRUE(oracle::check_relations(tri, rels, "ns-on-tri").passed());
      ++checked;
    }
  }
  EXPECT_GT(checked, 10);
}
