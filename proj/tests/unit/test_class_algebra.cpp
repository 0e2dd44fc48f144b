#include <gtest/gtest.h>

#include <atomic>
#include <random>

#include "oracles.hpp"
#include "wreathfh/catalog.hpp"
#include "wreathfh/class_algebra.hpp"
#include "wreathfh/error.hpp"

using namespace wfh;

namespace {

const ClassPartitionMap kEmpty;
ClassPartitionMap P(ClassIndex c, Partition p) { return ClassPartitionMap{{c, std::move(p)}}; }

}  // namespace

TEST(StructureConstant, SymmetricGroupValues) {
  AdeGroup g = make_cyclic(1);
  WreathContext ctx(g.group, g.classes);
  // z = (12)(34): σ is one of the four transpositions joining the two pairs
  for (int n = 4; n <= 6; ++n)
    EXPECT_EQ(structure_constant(ctx, n, P(0, {1}), P(0, {3}), P(0, {1, 1})), 4) << n;
  EXPECT_EQ(structure_constant(ctx, 4, P(0, {1}), P(0, {1}), kEmpty), 6);
  EXPECT_EQ(structure_constant(ctx, 3, kEmpty, kEmpty, kEmpty), 1);
  EXPECT_THROW(structure_constant(ctx, 3, P(0, {1}), P(0, {1}), P(0, {3})), Error);
}

TEST(StructureConstant, AgainstExhaustiveClassAlgebra) {
  struct Case {
    const char* spec;
    int n;
  };
  for (auto [spec, n] : {Case{"cyclic:2", 3}, Case{"cyclic:3", 3}, Case{"symmetric:3", 2}, Case{"trivial", 5}}) {
    SCOPED_TRACE(spec);
    AdeGroup g = parse_group_spec(spec);
    WreathContext ctx(g.group, g.classes);
    auto labels = oracle::conjugacy_labels(g.group);
    std::vector<int> relabel(g.classes.size());
    for (ClassIndex c = 0; c < g.classes.size(); ++c) relabel[labels[g.classes.representative(c)]] = c;
    for (auto& l : labels) l = relabel[l];
    auto ca = oracle::build_class_algebra(g.group, labels, 0, n);
    for (const auto& [lambda, xs] : ca.classes)
      for (const auto& [mu, ys] : ca.classes) {
        ClassVector conv = convolve(ctx, n, lambda, mu);
        for (const auto& [nu, zs] : ca.classes) {
          long expected = ca.structure_constant(g.group, lambda, mu, nu);
          EXPECT_EQ(conv.coeff(nu), expected) << lambda.str() << mu.str() << nu.str();
          if (lambda.degree() + mu.degree() <= 3 && lambda.length() + mu.length() <= 3) {
            EXPECT_EQ(structure_constant(ctx, n, lambda, mu, nu), expected);
          }
          // filtration: nothing above ‖λ‖+‖μ‖
          if (nu.degree() > lambda.degree() + mu.degree()) {
            EXPECT_EQ(expected, 0);
          }
        }
      }
  }
}

TEST(Convolve, IdentityAndGradedPart) {
  AdeGroup z2 = make_cyclic(2);
  WreathContext ctx(z2.group, z2.classes);
  ClassPartitionMap mu{{0, Partition{1}}, {1, Partition{2}}};
  ClassVector v = convolve(ctx, 5, kEmpty, mu);
  EXPECT_EQ(v.coeffs.size(), 1u);
  EXPECT_EQ(v.coeff(mu), 1);

  ClassVector graded = graded_product(ctx, 4, P(0, {1}), P(0, {1}));
  EXPECT_EQ(graded.coeffs.size(), 3u);
  EXPECT_EQ(graded.coeff(P(0, {1, 1})), 2);
  EXPECT_EQ(graded.coeff(P(0, {2})), 3);
  EXPECT_EQ(graded.coeff(P(1, {1, 1})), 2);
  ClassVector at5 = graded_product(ctx, 5, P(0, {1}), P(0, {1}));
  EXPECT_EQ(at5.coeffs, graded.coeffs);
}

TEST(Convolve, ThreadsAgree) {
  AdeGroup s3 = make_symmetric(3);
  WreathContext ctx(s3.group, s3.classes);
  OracleOptions one, four;
  four.threads = 4;
  ClassPartitionMap lambda{{1, Partition{1}}, {0, Partition{1}}}, mu{{2, Partition{2}}};
  EXPECT_EQ(convolve(ctx, 4, lambda, mu, one), convolve(ctx, 4, lambda, mu, four));
}

TEST(Budget, ExceededIsAnError) {
  AdeGroup z2 = make_cyclic(2);
  WreathContext ctx(z2.group, z2.classes);
  std::atomic<std::uint64_t> used{0};
  OracleOptions opt;
  opt.budget = 50;
  opt.used = &used;
  try {
    convolve(ctx, 6, P(0, {2}), P(1, {2}), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
  opt.budget = 100'000'000;
  convolve(ctx, 4, P(0, {1}), P(0, {1}), opt);
  EXPECT_GT(used.load(), 0u);
}

TEST(PairCount, Identity) {
  AdeGroup triv = make_cyclic(1);
  WreathContext tctx(triv.group, triv.classes);
  EXPECT_EQ(pair_count(tctx, 4, P(0, {1}), P(0, {3}), P(0, {1, 1})), 12);
  EXPECT_EQ(pair_count(tctx, 3, kEmpty, kEmpty, kEmpty), 1);

  // 20 random realizable triples over small wreath products
  std::mt19937 rng(5);
  int checked = 0;
  for (const char* spec : {"cyclic:2", "cyclic:3", "symmetric:3"}) {
    AdeGroup g = parse_group_spec(spec);
    WreathContext ctx(g.group, g.classes);
    const int n = g.group.order() == 6 ? 2 : 3;
    std::vector<ClassPartitionMap> types;
    for (int d = 0; d <= n; ++d)
      for (const auto& m : pfns_of_degree(d, g.classes.size()))
        if (realizable_threshold(m, 0) <= n) types.push_back(m);
    std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
    for (int t = 0; t < 7 && checked < 20; ++t, ++checked) {
      const auto &a = types[pick(rng)], &b = types[pick(rng)], &c = types[pick(rng)];
      EXPECT_TRUE(pair_count_identity_check(ctx, n, a, b, c)) << spec << a.str() << b.str() << c.str();
    }
  }
  EXPECT_EQ(checked, 20);
}

TEST(MaxPairSupport, Values) {
  AdeGroup triv = make_cyclic(1);
  WreathContext ctx(triv.group, triv.classes);
  EXPECT_EQ(max_pair_support(ctx, P(0, {1}), P(0, {3}), P(0, {1, 1})), 0);
  EXPECT_EQ(max_pair_support(ctx, P(0, {1}), P(0, {1}), kEmpty), 2);
  EXPECT_EQ(max_pair_support(ctx, kEmpty, kEmpty, kEmpty), 0);
}

TEST(MinimalAdmissibleN, Values) {
  EXPECT_EQ(minimal_admissible_n(P(0, {1}), P(0, {1}), 0), 4);
  EXPECT_EQ(minimal_admissible_n(P(1, {2}), P(0, {1}), 0), 4);
  EXPECT_EQ(minimal_admissible_n(kEmpty, kEmpty, 0), 0);
}

// Support of a product covers the support of the factors exactly when the
// degrees add up; checked over all of (Z/2)_n for n <= 4.
TEST(SupportEquality, ExhaustiveZ2) {
  AdeGroup z2 = make_cyclic(2);
  WreathContext ctx(z2.group, z2.classes);
  for (int n = 1; n <= 4; ++n) {
    auto all = oracle::all_elements(z2.group, n);
    for (const auto& x : all)
      for (const auto& y : all) {
        WreathElement xy = multiply(z2.group, x, y);
        if (degree(ctx, xy) == degree(ctx, x) + degree(ctx, y)) {
          ASSERT_EQ(support(z2.group, {x, y}), support(z2.group, {xy}));
        }
      }
  }
}
