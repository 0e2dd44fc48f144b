#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wreathfh/catalog.hpp"
#include "wreathfh/error.hpp"
#include "wreathfh/literals.hpp"
#include "wreathfh/wreath.hpp"

using namespace wfh;

namespace {

// Z/2 = {+, -} with + = 0 and - = 1; class index equals element index.
struct RunningExample : ::testing::Test {
  AdeGroup z2 = make_cyclic(2);
  WreathContext ctx{z2.group, z2.classes};
  WreathElement x = parse_element(z2.group, R"({"n":8,"g":[0,0,1,0,0,0,1,1],"sigma":[3,4,1,7,5,6,2,8]})");
  WreathElement y = parse_element(z2.group, R"({"n":8,"g":[1,0,1,0,0,0,1,1],"sigma":[7,2,8,5,4,6,1,3]})");
};

WreathElement random_element(const FiniteGroup& g, int n, std::mt19937& rng) {
  WreathElement x{n, std::vector<int>(n), std::vector<int>(n)};
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (int i = 0; i < n; ++i) {
    x.g[i] = pick(rng);
    x.sigma[i] = i;
  }
  std::shuffle(x.sigma.begin(), x.sigma.end(), rng);
  return x;
}

WreathElement product_of(const FiniteGroup& g, const std::vector<ReducedFactor>& fs, int n) {
  WreathElement acc = wreath_identity(g, n);
  for (const auto& f : fs) acc = multiply(g, acc, factor_element(g, f, n));
  return acc;
}

}  // namespace

TEST_F(RunningExample, Types) {
  EXPECT_EQ(type_of(ctx, x), (ClassPartitionMap{{0, Partition{1, 1}}, {1, Partition{3, 2, 1}}}));
  EXPECT_EQ(type_of(ctx, y), (ClassPartitionMap{{0, Partition{2, 2, 2, 1, 1}}}));
  EXPECT_EQ(modified_type_of(ctx, x), (ClassPartitionMap{{1, Partition{3, 2, 1}}}));
  EXPECT_EQ(modified_type_of(ctx, y), (ClassPartitionMap{{0, Partition{1, 1, 1}}}));
  EXPECT_EQ(degree(ctx, x), 6);
  EXPECT_EQ(degree(ctx, y), 3);
}

TEST_F(RunningExample, CycleProducts) {
  auto cs = cycles(ctx, x);
  ASSERT_EQ(cs.size(), 5u);
  EXPECT_EQ(cs[0].support, (std::vector<int>{1, 3}));
  EXPECT_EQ(cs[0].product, 1);
  EXPECT_EQ(cs[1].support, (std::vector<int>{2, 4, 7}));
  EXPECT_EQ(cs[1].product, 1);
}

TEST_F(RunningExample, Supports) {
  EXPECT_EQ(support(z2.group, {x}), (std::set<int>{1, 2, 3, 4, 7, 8}));
  EXPECT_EQ(support(z2.group, {y}), (std::set<int>{1, 3, 4, 5, 7, 8}));
  EXPECT_EQ(support(z2.group, {x, y}), (std::set<int>{1, 2, 3, 4, 5, 7, 8}));
}

TEST_F(RunningExample, ProductMatchesPermutationModel) {
  WreathElement xy = multiply(z2.group, x, y);
  auto expected = oracle::compose(oracle::as_permutation(z2.group, x), oracle::as_permutation(z2.group, y));
  EXPECT_EQ(oracle::as_permutation(z2.group, xy), expected);
  auto labels = oracle::conjugacy_labels(z2.group);
  EXPECT_EQ(modified_type_of(ctx, xy), oracle::naive_modified_type(z2.group, labels, xy, 0));
}

TEST_F(RunningExample, ReducedExpression) {
  auto fs = reduced_expression(ctx, x);
  EXPECT_EQ(fs.size(), 6u);
  EXPECT_EQ(product_of(z2.group, fs, 8), x);
}

TEST_F(RunningExample, CentralizerOrders) {
  // |Γ_n| / |class| = Z_ρ
  BigInt order = ipow(2, 8) * factorial(8);
  EXPECT_EQ(order / class_size(ctx, 8, modified_type_of(ctx, x)), 384);
  EXPECT_EQ(order / class_size(ctx, 8, modified_type_of(ctx, y)), 3072);
}

TEST(Wreath, IdentityType) {
  AdeGroup s3 = make_symmetric(3);
  WreathContext ctx(s3.group, s3.classes);
  auto e = wreath_identity(s3.group, 5);
  EXPECT_EQ(type_of(ctx, e), (ClassPartitionMap{{0, Partition{1, 1, 1, 1, 1}}}));
  EXPECT_TRUE(modified_type_of(ctx, e).empty());
  EXPECT_EQ(degree(ctx, e), 0);
  EXPECT_TRUE(reduced_expression(ctx, e).empty());
}

TEST(Wreath, MarkedTranspositionIsAnInvolution) {
  AdeGroup g = make_cyclic(3);
  WreathContext ctx(g.group, g.classes);
  ReducedFactor t{ReducedFactor::Kind::Transposition, 2, 4, 1};
  WreathElement x = factor_element(g.group, t, 5);
  EXPECT_EQ(multiply(g.group, x, x), wreath_identity(g.group, 5));
  EXPECT_EQ(reduced_expression(ctx, x), std::vector<ReducedFactor>{t});
}

TEST(Wreath, SingleCycleDegrees) {
  AdeGroup g = make_cyclic(3);
  WreathContext ctx(g.group, g.classes);
  for (int k = 1; k <= 5; ++k) {
    // k-cycle (1 2 ... k) with one nontrivial entry, then with trivial entries
    WreathElement x = wreath_identity(g.group, k);
    for (int i = 0; i < k; ++i) x.sigma[i] = (i + 1) % k;
    EXPECT_EQ(degree(ctx, x), k - 1);
    x.g[k - 1] = 1;
    EXPECT_EQ(degree(ctx, x), k);
    auto fs = reduced_expression(ctx, x);
    EXPECT_EQ(fs.size(), static_cast<std::size_t>(k));
    EXPECT_EQ(fs.back().kind, ReducedFactor::Kind::Insertion);
    EXPECT_EQ(product_of(g.group, fs, k), x);
  }
}

TEST(Wreath, EmbeddingKeepsModifiedType) {
  AdeGroup s3 = make_symmetric(3);
  WreathContext ctx(s3.group, s3.classes);
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    WreathElement x = random_element(s3.group, 4, rng);
    EXPECT_EQ(modified_type_of(ctx, embed(s3.group, x, 7)), modified_type_of(ctx, x));
  }
}

TEST(Wreath, RandomAgainstOracles) {
  std::mt19937 rng(11);
  for (const char* spec : {"cyclic:2", "cyclic:3", "symmetric:3", "bd:12"}) {
    SCOPED_TRACE(spec);
    AdeGroup g = parse_group_spec(spec);
    WreathContext ctx(g.group, g.classes);
    auto labels = oracle::conjugacy_labels(g.group);
    // oracle labels follow smallest-element order; map to the library's.
    std::vector<int> relabel(g.classes.size());
    for (ClassIndex c = 0; c < g.classes.size(); ++c) relabel[labels[g.classes.representative(c)]] = c;
    for (auto& l : labels) l = relabel[l];
    for (int t = 0; t < 300; ++t) {
      const int n = 1 + t % 6;
      WreathElement x = random_element(g.group, n, rng), y = random_element(g.group, n, rng);
      WreathElement xy = multiply(g.group, x, y);
      EXPECT_EQ(xy, oracle::naive_multiply(g.group, x, y));
      EXPECT_EQ(oracle::as_permutation(g.group, xy),
                oracle::compose(oracle::as_permutation(g.group, x), oracle::as_permutation(g.group, y)));
      EXPECT_EQ(multiply(g.group, x, inverse(g.group, x)), wreath_identity(g.group, n));
      ClassPartitionMap mt = modified_type_of(ctx, x);
      EXPECT_EQ(mt, oracle::naive_modified_type(g.group, labels, x, 0));
      // conjugation invariance
      EXPECT_EQ(modified_type_of(ctx, multiply(g.group, multiply(g.group, y, x), inverse(g.group, y))), mt);
      // reduced expression has length ‖x‖ and multiplies back to x
      auto fs = reduced_expression(ctx, x);
      EXPECT_EQ(static_cast<int>(fs.size()), degree(ctx, x));
      EXPECT_EQ(product_of(g.group, fs, n), x);
      // full/modified round trip
      EXPECT_EQ(to_full(mt, n, 0), type_of(ctx, x));
      EXPECT_EQ(to_modified(type_of(ctx, x), 0), mt);
    }
  }
}

TEST(Wreath, ToFullTooSmall) {
  ClassPartitionMap mu{{0, Partition{2}}, {1, Partition{1}}};
  EXPECT_EQ(realizable_threshold(mu, 0), 4);
  EXPECT_EQ(to_full(mu, 4, 0), (ClassPartitionMap{{0, Partition{3}}, {1, Partition{1}}}));
  try {
    to_full(mu, 3, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooSmall);
  }
}

TEST(Wreath, ValidateRejectsBadElements) {
  AdeGroup g = make_cyclic(2);
  EXPECT_THROW(validate(g.group, WreathElement{2, {0, 0}, {0, 0}}), Error);
  EXPECT_THROW(validate(g.group, WreathElement{2, {0, 2}, {1, 0}}), Error);
  EXPECT_THROW(validate(g.group, WreathElement{2, {0}, {1, 0}}), Error);
  EXPECT_NO_THROW(validate(g.group, WreathElement{2, {1, 0}, {1, 0}}));
}

TEST(Enumerate, SmallClasses) {
  AdeGroup z2 = make_cyclic(2);
  WreathContext ctx(z2.group, z2.classes);
  int count = 0;
  enumerate_class(ctx, 2, ClassPartitionMap{{1, Partition{1}}}, [&](const WreathElement& x) {
    EXPECT_EQ(x.sigma, (std::vector<int>{0, 1}));
    EXPECT_EQ(x.g[0] + x.g[1], 1);
    ++count;
  });
  EXPECT_EQ(count, 2);
  EXPECT_EQ(class_size(ctx, 2, ClassPartitionMap{{1, Partition{1}}}), 2);

  AdeGroup triv = make_cyclic(1);
  WreathContext tctx(triv.group, triv.classes);
  count = 0;
  enumerate_class(tctx, 4, ClassPartitionMap{{0, Partition{1}}}, [&](const WreathElement&) { ++count; });
  EXPECT_EQ(count, 6);

  // ‖μ‖ + ℓ(μ(c⁰)) = n + 1: nothing to visit
  count = 0;
  enumerate_class(tctx, 4, ClassPartitionMap{{0, Partition{2, 1}}}, [&](const WreathElement&) { ++count; });
  EXPECT_EQ(count, 0);
  EXPECT_EQ(class_size(tctx, 4, ClassPartitionMap{{0, Partition{2, 1}}}), 0);
  EXPECT_THROW(canonical_representative(tctx, 4, ClassPartitionMap{{0, Partition{2, 1}}}), Error);
}

// Every class of Γ_n from the naive model must be enumerated exactly, shards
// included.
TEST(Enumerate, MatchesExhaustivePartition) {
  struct Case {
    const char* spec;
    int n;
  };
  for (auto [spec, n] : {Case{"cyclic:2", 4}, Case{"cyclic:3", 3}, Case{"symmetric:3", 2}, Case{"trivial", 5}}) {
    SCOPED_TRACE(spec);
    AdeGroup g = parse_group_spec(spec);
    WreathContext ctx(g.group, g.classes);
    std::map<ClassPartitionMap, std::set<std::vector<int>>> by_type;
    for (const auto& x : oracle::all_elements(g.group, n)) {
      std::vector<int> key = x.g;
      key.insert(key.end(), x.sigma.begin(), x.sigma.end());
      by_type[modified_type_of(ctx, x)].insert(key);
    }
    for (const auto& [mu, elems] : by_type) {
      EXPECT_EQ(class_size(ctx, n, mu), elems.size()) << mu.str();
      EXPECT_EQ(modified_type_of(ctx, canonical_representative(ctx, n, mu)), mu);
      for (int shards : {1, 3}) {
        std::set<std::vector<int>> seen;
        std::size_t visits = 0;
        for (int s = 0; s < shards; ++s)
          enumerate_class(ctx, n, mu, [&](const WreathElement& x) {
            std::vector<int> key = x.g;
            key.insert(key.end(), x.sigma.begin(), x.sigma.end());
            seen.insert(key);
            ++visits;
          }, EnumerateShard{s, shards});
        EXPECT_EQ(visits, elems.size()) << mu.str();
        EXPECT_EQ(seen, elems) << mu.str();
      }
    }
  }
}

TEST(TypeSignature, RoundTrip) {
  AdeGroup s3 = make_symmetric(3);
  WreathContext ctx(s3.group, s3.classes);
  std::mt19937 rng(3);
  TypeSignature sig;
  for (int t = 0; t < 200; ++t) {
    WreathElement x = random_element(s3.group, 5, rng);
    auto mt = modified_type_of(ctx, x);
    EXPECT_EQ(sig.compute(ctx, x), TypeSignature::of(mt, 0));
    EXPECT_EQ(TypeSignature::decode(TypeSignature::of(mt, 0), 0), mt);
  }
}
