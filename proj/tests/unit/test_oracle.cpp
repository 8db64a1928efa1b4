#include <gtest/gtest.h>

#include "nsalg/corpus.hpp"
#include "nsalg/oracle.hpp"
#include "support.hpp"

using namespace nsalg;
using nsalg::testkit::Gen;

TEST(ParenTrees, CatalanCounts) {
  const std::size_t expected[] = {1, 1, 1, 2, 5, 14, 42, 132};
  for (std::size_t n = 1; n <= 7; ++n) {
    auto trees = oracle::enumerate_paren_trees(n);
    EXPECT_EQ(trees.size(), expected[n]) << n;
    EXPECT_EQ(oracle::catalan(n - 1), expected[n]);
    for (const auto& t : trees) {
      auto labels = t.leaf_labels();
      for (std::size_t i = 0; i < labels.size(); ++i) EXPECT_EQ(labels[i], i + 1);
    }
    for (std::size_t i = 1; i < trees.size(); ++i) EXPECT_NE(trees[i - 1], trees[i]);
  }
}

TEST(Oracle, TwilledProjectionsPass) {
  for (const auto& tw : corpus::twilled()) {
    auto n = nijenhuis_operator(tw.algebra, tw.p1);
    EXPECT_TRUE(oracle::verify_pairsij(n, 6).passed()) << tw.name;
    EXPECT_TRUE(oracle::verify_xstar(n, 4).passed()) << tw.name;
  }
}

TEST(Oracle, IdentityAndZero) {
  FinAlgebra sl2 = corpus::sl2();
  EXPECT_TRUE(oracle::verify_pairsij(nijenhuis_operator(sl2, Matrix::identity(3)), 8).passed());
  EXPECT_TRUE(oracle::verify_xstar(nijenhuis_operator(sl2, Matrix(3, 3)), 4).passed());
}

TEST(Oracle, BoundsAndHypotheses) {
  auto n = nijenhuis_operator(corpus::sl2(), Matrix::identity(3));
  EXPECT_THROW(oracle::verify_xstar(n, 6), Error);
  EXPECT_THROW(oracle::verify_xstar(n, 1), Error);
  EXPECT_THROW(oracle::verify_pairsij(n, 17), Error);
  Matrix bad(3, 3, {0, 1, 0, 0, 0, 0, 0, 0, Rat(1, 2)});
  try {
    oracle::verify_xstar(nijenhuis_operator(corpus::sl2(), bad), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNijenhuis);
  }
}

// At length 2 and at (1, 1) both oracles reduce to the Nijenhuis identity.
TEST(OracleProperty, BaseCasesMatchNijenhuisCheck) {
  Gen g;
  for (int iter = 0; iter < 150; ++iter) {
    const auto algs = corpus::algebras();
    const auto& ex = algs[g.index(algs.size())];
    Matrix m = g.matrix(ex.algebra.dim, ex.algebra.dim, 0.3);
    auto n = nijenhuis_operator(ex.algebra, m);
    const bool nij = check_nijenhuis(n).passed();
    EXPECT_EQ(oracle::pairsij_identity(n, 1, 1).passed(), nij);
    EXPECT_EQ(oracle::xstar_identity(n, 2).passed(), nij);
  }
}

TEST(OracleProperty, ParallelWorkersGiveSameReport) {
  FinAlgebra ut = corpus::upper_triangular2();
  Matrix m(3, 3);
  m(0, 1) = 1;
  m(2, 2) = 2;
  auto n = nijenhuis_operator(ut, m);
  Report serial = oracle::xstar_identity(n, 4);
  set_jobs(3);
  Report parallel = oracle::xstar_identity(n, 4);
  set_jobs(1);
  EXPECT_EQ(serial.violations, parallel.violations);
  EXPECT_EQ(serial.evaluations, parallel.evaluations);
}

TEST(CrossCheck, AgreesOnCorpusAndMutations) {
  Gen g;
  for (const auto& tw : corpus::twilled()) {
    const auto cat = catalog(corpus::algebra(tw.name).categories.front());
    FinAlgebra ns = nijenhuis_ns(nijenhuis_operator(tw.algebra, tw.p1));
    auto ok = oracle::cross_check_split(cat, ns);
    EXPECT_TRUE(ok.agree());
    EXPECT_TRUE(ok.relations.passed());
    for (int iter = 0; iter < 10; ++iter) {
      FinAlgebra bad = ns;
      const OpSymbol op = std::vector<OpSymbol>{ops::prec, ops::succ, ops::vee}[g.index(3)];
      const auto d = bad.dim;
      auto& t = bad.products.at(op);
      const std::size_t i = g.index(d), j = g.index(d), k = g.index(d);
      t = t.with_entry(i, j, k, t.at(i, j, k) + g.rat(true));
      EXPECT_TRUE(oracle::cross_check_split(cat, bad).agree());
    }
  }
  FinAlgebra zero = FinAlgebra::make(2, {{ops::prec, BilinearMap(2, 2, 2)},
                                         {ops::succ, BilinearMap(2, 2, 2)},
                                         {ops::vee, BilinearMap(2, 2, 2)}});
  auto z = oracle::cross_check_split(catalog("associative"), zero);
  EXPECT_TRUE(z.agree() && z.relations.passed());
}
