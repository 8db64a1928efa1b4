#include <gtest/gtest.h>

#include <algorithm>

#include "nsalg/terms.hpp"
#include "support.hpp"

using namespace nsalg;
using nsalg::testkit::Gen;

namespace {

const std::vector<OpSymbol> kOps = {ops::prec, ops::succ, ops::vee};

// Evaluates a relation in a random algebra carrying one tensor per op.
struct RandomModel {
  std::size_t d;
  std::map<OpSymbol, BilinearMap> tables;
  ProductBinding<Vector> bind;

  RandomModel(Gen& g, std::size_t dim, const std::vector<OpSymbol>& ops) : d(dim) {
    for (const auto& op : ops) tables.emplace(op, g.tensor(d, d, d, 0.5));
    for (const auto& [op, t] : tables) {
      const BilinearMap* p = &t;
      bind[op] = [p](const Vector& x, const Vector& y) { return p->apply(x, y); };
    }
  }

  Vector eval(const Relation& rel, const std::vector<Vector>& args) const {
    return evaluate_relation<Vector>(rel, args, bind, Vector(d));
  }
};

std::vector<Vector> random_args(Gen& g, std::size_t n, std::size_t d) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = g.rat();
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(Monomial, ParsesAndRendersText) {
  Relation r = parse_relation("(a<b)<c = a<(b@c)");
  EXPECT_EQ(r.arity, 3u);
  EXPECT_EQ(render_text(r), "(a<b)<c - a<(b@c)");
  EXPECT_EQ(render_text(parse_relation("2/3 a*b - b*a")), "2/3 a*b - b*a");
  EXPECT_EQ(render_text(parse_relation("a{foo}b")), "a{foo}b");
}

TEST(Monomial, RendersTex) {
  Relation r = parse_relation("(a|b)<c - 1/2 a.(b@c)");
  EXPECT_EQ(render_tex(r), "(a\\vee b)\\prec c - \\tfrac{1}{2}a\\cdot(b\\star c)");
  EXPECT_EQ(render_tex(parse_relation("(a#b)*c + a{foo}(b>c)")),
            "(a\\times b)c + a\\mathbin{\\mathrm{foo}}(b\\succ c)");
  EXPECT_EQ(render_tex(Relation{}), "0");
}

TEST(Monomial, RejectsMalformedInput) {
  EXPECT_THROW(parse_relation("a*b*c"), Error);
  EXPECT_THROW(parse_relation("a*b - a*(b*c)"), Error);
  EXPECT_THROW(parse_relation("a*a"), Error);
  EXPECT_THROW(parse_relation("(a*b"), Error);
  EXPECT_THROW(Monomial::leaf(1).with_op_at(0, ops::mu), Error);
}

TEST(Monomial, OrderingIsTotalAndShapeFirst) {
  Monomial l = parse_relation("(a*b)*c").terms[0].mono;
  Monomial r = parse_relation("a*(b*c)").terms[0].mono;
  EXPECT_LT(l, r);  // internal node before leaf in preorder
  EXPECT_EQ(l.left().right(), Monomial::leaf(2));
  EXPECT_EQ(l.with_op_at(1, ops::vee), parse_relation("(a|b)*c").terms[0].mono);
}

TEST(Relation, CanonMergesAndDropsZeros) {
  Relation r = parse_relation("a*b + b*a - a*b - b*a");
  EXPECT_TRUE(canon(r).is_zero());
  EXPECT_EQ(render_text(canon(parse_relation("b*a + 2 a*b - a*b"))), "a*b + b*a");
}

TEST(Relation, ScalarAndRelabelingEquivalence) {
  Relation r = parse_relation("(a*b)*c - a*(b*c)");
  EXPECT_TRUE(relations_equal_up_to_scalar(r, canon(Rat(-3, 2) * r)));
  EXPECT_FALSE(relations_equal_up_to_scalar(r, parse_relation("(a*b)*c + a*(b*c)")));
  Relation s = parse_relation("a*(b*c) - b*(a*c)");
  Relation t = parse_relation("b*(a*c) - a*(b*c)");
  EXPECT_TRUE(equivalent_up_to_relabeling(s, t));
  EXPECT_TRUE(equivalent_up_to_relabeling(parse_relation("a*(b*c)"), parse_relation("c*(a*b)")));
  EXPECT_FALSE(equivalent_up_to_relabeling(parse_relation("a*(b*c)"), parse_relation("(a*b)*c")));
}

TEST(Relation, SubstituteOpExpands) {
  Relation r = parse_relation("a@b");
  const OpRewrite star[] = {{1, ops::prec}, {1, ops::succ}, {1, ops::vee}};
  EXPECT_EQ(render_text(substitute_op(r, ops::star, star)), "a<b + a>b + a|b");
  const OpRewrite swap[] = {{-1, ops::times, true}};
  EXPECT_EQ(render_text(substitute_op(parse_relation("a<b"), ops::prec, swap)), "-b#a");
}

TEST(Catalog, SixPresentationsOverMu) {
  auto names = catalog_names();
  EXPECT_GE(names.size(), 6u);
  for (const auto& n : names) {
    auto p = catalog(n);
    EXPECT_EQ(p.name, n);
    EXPECT_FALSE(p.relations.empty());
    for (const auto& r : p.relations) {
      EXPECT_TRUE(is_canonical(r));
      for (const auto& op : ops_used(r)) EXPECT_EQ(op, ops::mu);
    }
  }
  EXPECT_THROW(catalog("jordan"), Error);
}

TEST(Catalog, MakePresentationValidates) {
  EXPECT_THROW(make_presentation("x", ops::mu, {parse_relation("a<b")}), Error);
  auto p = make_presentation("x", ops::mu, {parse_relation("a*b"), parse_relation("2 a*b"), Relation{}});
  EXPECT_EQ(p.relations.size(), 1u);
}

// -- properties ---------------------------------------------------------------

TEST(TermsProperty, CanonIsIdempotentAndOrderInvariant) {
  Gen g;
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + g.index(4);
    Relation r = g.relation(n, kOps, 1 + g.index(6));
    Relation c = canon(r);
    ASSERT_EQ(canon(c), c);
    ASSERT_TRUE(is_canonical(c));
    Relation shuffled = r;
    std::shuffle(shuffled.terms.begin(), shuffled.terms.end(), g.engine());
    ASSERT_EQ(canon(shuffled), c);
  }
}

TEST(TermsProperty, CanonPreservesEvaluation) {
  Gen g;
  RandomModel model(g, 2, kOps);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 2 + g.index(3);
    Relation r = g.relation(n, kOps, 1 + g.index(5));
    // Duplicate a term so merging is exercised.
    r.terms.push_back(Term{g.rat(), r.terms.front().mono});
    auto args = random_args(g, n, model.d);
    ASSERT_EQ(model.eval(r, args), model.eval(canon(r), args));
  }
}

TEST(TermsProperty, ScalarEquivalenceIsAnEquivalence) {
  Gen g;
  for (int iter = 0; iter < 200; ++iter) {
    Relation a = canon(g.relation(3, kOps, 1 + g.index(4)));
    if (a.is_zero()) continue;
    Relation b = canon(g.rat(true) * a);
    Relation c = canon(g.rat(true) * b);
    ASSERT_TRUE(relations_equal_up_to_scalar(a, a));
    ASSERT_EQ(relations_equal_up_to_scalar(a, b), relations_equal_up_to_scalar(b, a));
    ASSERT_TRUE(relations_equal_up_to_scalar(a, b) && relations_equal_up_to_scalar(b, c));
    ASSERT_TRUE(relations_equal_up_to_scalar(a, c));
    Relation other = canon(g.relation(3, kOps, 1 + g.index(4)));
    if (!other.is_zero()) {
      ASSERT_EQ(relations_equal_up_to_scalar(a, other), relations_equal_up_to_scalar(other, a));
    }
  }
}

TEST(TermsProperty, RelabelingIsAnEquivalenceWitnessedByPermutations) {
  Gen g;
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 2 + g.index(3);
    Relation a = canon(g.relation(n, kOps, 1 + g.index(4)));
    if (a.is_zero()) continue;
    std::vector<std::uint32_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i + 1);
    std::shuffle(perm.begin(), perm.end(), g.engine());
    Relation b = canon(g.rat(true) * relabeled(a, perm));
    ASSERT_TRUE(equivalent_up_to_relabeling(a, b));
    ASSERT_TRUE(equivalent_up_to_relabeling(b, a));
  }
}

TEST(TermsProperty, TextRoundTrip) {
  Gen g;
  const std::vector<OpSymbol> all = {ops::mu, ops::prec, ops::succ, ops::vee, ops::dot, ops::star, ops::times,
                                     OpSymbol{"h"}};
  for (int iter = 0; iter < 300; ++iter) {
    Relation r = canon(g.relation(1 + g.index(6), all, 1 + g.index(5)));
    if (r.is_zero()) continue;
    ASSERT_EQ(parse_relation(render_text(r)), r) << render_text(r);
  }
}
