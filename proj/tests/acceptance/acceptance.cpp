// One line per acceptance criterion: PASS/FAIL, elapsed time and limit.
// Exit status is nonzero when any criterion fails or overruns its limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "wreathfh/catalog.hpp"
#include "wreathfh/class_algebra.hpp"
#include "wreathfh/error.hpp"
#include "wreathfh/fh_ring.hpp"
#include "wreathfh/interp.hpp"
#include "wreathfh/partition.hpp"
#include "wreathfh/wreath.hpp"

using namespace wfh;

namespace {

const ClassPartitionMap kEmpty;
ClassPartitionMap P(ClassIndex c, Partition p) { return ClassPartitionMap{{c, std::move(p)}}; }

// Failure detail; empty string means the criterion holds.
using Check = std::function<std::string()>;

FHVector oracle_top(const WreathContext& ctx, const ClassPartitionMap& a, const ClassPartitionMap& b, int n) {
  FHVector out;
  for (const auto& [k, c] : graded_product(ctx, n, a, b).coeffs) out[k] = Rational(c);
  return out;
}

std::string mismatch(const std::string& what, const FHVector& got, const FHVector& want) {
  return what + ": got " + to_string(got) + ", expected " + to_string(want);
}

std::string example_square() {
  AdeGroup g = make_cyclic(2);
  WreathContext wctx(g.group, g.classes);
  FHContext ctx = FHContext::from(g.classes);
  FHVector expected{{P(0, {1, 1}), 2}, {P(0, {2}), 3}, {P(1, {1, 1}), 2}};
  FHVector closed = specialize(single_cycle_product_trivial(ctx, P(0, {1}), 1), ctx);
  if (closed != expected) return mismatch("closed form", closed, expected);
  for (int n : {4, 5}) {
    FHVector o = oracle_top(wctx, P(0, {1}), P(0, {1}), n);
    if (o != expected) return mismatch("oracle n=" + std::to_string(n), o, expected);
  }
  return "";
}

std::string example_mixed() {
  AdeGroup g = make_cyclic(2);
  WreathContext wctx(g.group, g.classes);
  FHContext ctx = FHContext::from(g.classes);
  for (int s = 1; s <= 4; ++s)
    for (int r = 1; r <= 4; ++r) {
      const ClassPartitionMap a = P(0, {s}), b = P(1, {r});
      const std::string tag = " s=" + std::to_string(s) + " r=" + std::to_string(r);
      FHVector expected{{union_of(a, b), 1}, {P(1, {s + r}), s + r}};
      FHVector nontrivial = single_cycle_product_nontrivial(ctx, a, r, 1);
      FHVector trivial = specialize(single_cycle_product_trivial(ctx, b, s), ctx);
      if (nontrivial != expected) return mismatch("nontrivial-cycle form" + tag, nontrivial, expected);
      if (trivial != expected) return mismatch("trivial-cycle form" + tag, trivial, expected);
      FHVector o = oracle_top(wctx, a, b, minimal_admissible_n(a, b, 0));
      if (o != expected) return mismatch("oracle" + tag, o, expected);
    }
  return "";
}

std::string constant_remark() {
  AdeGroup g = make_cyclic(1);
  WreathContext ctx(g.group, g.classes);
  std::vector<SamplePoint> pts;
  for (long n = 4; n <= 7; ++n) pts.emplace_back(n, structure_constant(ctx, static_cast<int>(n), P(0, {1}), P(0, {3}), P(0, {1, 1})));
  IntegerValuedPoly f = fit(pts);
  if (f != IntegerValuedPoly({2})) return "oracle values fit " + f.str() + ", expected the constant 2";
  return "";
}

std::string oracle_sweep() {
  int checked = 0;
  for (const char* spec : {"trivial", "cyclic:2", "cyclic:3", "symmetric:3"}) {
    AdeGroup g = parse_group_spec(spec);
    WreathContext wctx(g.group, g.classes);
    FHContext ctx = FHContext::from(g.classes);
    for (int d = 0; d <= 4; ++d)
      for (const auto& lambda : pfns_of_degree(d, ctx.num_classes))
        for (ClassIndex c = 0; c < ctx.num_classes; ++c)
          for (int r = 1; d + r <= 5; ++r) {
            FHVector closed = c == 0 ? specialize(single_cycle_product_trivial(ctx, lambda, r), ctx)
                                     : single_cycle_product_nontrivial(ctx, lambda, r, c);
            const ClassPartitionMap cyc = single_cycle(r, c);
            FHVector o = oracle_top(wctx, lambda, cyc, minimal_admissible_n(lambda, cyc, 0));
            if (closed != o) return mismatch(std::string(spec) + " " + lambda.str() + "*" + cyc.str(), closed, o);
            ++checked;
          }
  }
  return checked > 0 ? "" : "nothing checked";
}

std::string table_rows() {
  struct Row {
    const char* spec;
    Table2Row row;
  };
  const Row rows[] = {{"cyclic:5", {5, 4, 0, 2}}, {"cyclic:6", {6, 4, 1, 2}}, {"bd:24", {9, 0, 8, 1}},
                      {"bd:12", {6, 2, 3, 2}},    {"bt", {7, 4, 2, 2}},       {"bo", {8, 0, 7, 1}},
                      {"bi", {9, 0, 8, 1}}};
  for (const auto& [spec, want] : rows) {
    AdeGroup g = parse_group_spec(spec);
    Table2Row got = table2_row(g);
    if (!(got == want)) {
      std::ostringstream os;
      os << spec << ": (" << got.num_classes << "," << got.num_complex << "," << got.num_real << ","
         << got.tau_order << ")";
      return os.str();
    }
    auto fixed = tau_fixed_classes(g);
    auto real = real_complex_split(g.classes).real_classes;
    if (std::set<ClassIndex>(fixed.begin(), fixed.end()) != std::set<ClassIndex>(real.begin(), real.end()))
      return std::string(spec) + ": tau-fixed classes differ from the real classes";
  }
  return "";
}

std::string relations() {
  struct Case {
    Polyhedral kind;
    int order, a_pow;
  };
  for (auto [kind, order, a_pow] : {Case{Polyhedral::BT, 24, 3}, Case{Polyhedral::BO, 48, 4}, Case{Polyhedral::BI, 120, 5}}) {
    AdeGroup g = make_binary_polyhedral(kind);
    const FiniteGroup& G = g.group;
    Element A = g.generators.at("A"), B = g.generators.at("B"), C = g.generators.at("C"), Z = g.generators.at("Z");
    if (G.order() != order) return g.name + ": order " + std::to_string(G.order());
    if (G.power(A, a_pow) != Z || G.power(B, 3) != Z || G.power(C, 2) != Z) return g.name + ": relations fail";
    if (kind == Polyhedral::BI) {
      std::vector<int> orders{G.element_order(A), G.element_order(G.power(A, 2)), G.element_order(G.power(A, 3)),
                              G.element_order(G.power(A, 4)), G.element_order(B), G.element_order(G.power(B, 2)),
                              G.element_order(C)};
      if (orders != std::vector<int>{10, 5, 10, 5, 6, 3, 4}) return "BI element orders differ";
    }
  }
  return "";
}

std::string polynomiality() {
  AdeGroup triv = make_cyclic(1);
  WreathContext tctx(triv.group, triv.classes);
  std::vector<SamplePoint> pts;
  for (long n = 2; n <= 4; ++n) pts.emplace_back(n, structure_constant(tctx, static_cast<int>(n), P(0, {1}), P(0, {1}), kEmpty));
  IntegerValuedPoly f = fit(pts);
  if (f != IntegerValuedPoly({0, 0, 1})) return "fit " + f.str() + ", expected C(x,2)";
  for (auto [n, want] : {std::pair{5, 10}, std::pair{6, 15}}) {
    BigInt o = structure_constant(tctx, n, P(0, {1}), P(0, {1}), kEmpty);
    if (f(n) != want || o != want) return "prediction at n=" + std::to_string(n);
  }
  int triples = 0;
  for (const char* spec : {"trivial", "cyclic:2"}) {
    AdeGroup g = parse_group_spec(spec);
    WreathContext ctx(g.group, g.classes);
    FHRing ring(FHContext::from(g.classes));
    for (int da = 1; da <= 2; ++da)
      for (int db = 1; da + db <= 3; ++db)
        for (const auto& a : pfns_of_degree(da, g.classes.size()))
          for (const auto& b : pfns_of_degree(db, g.classes.size()))
            for (const auto& [nu, c] : ring.product(a, b)) {
              PolynomialityReport rep = verify_polynomiality(ctx, a, b, nu, 2);
              if (rep.poly.degree() != 0)
                return std::string(spec) + " " + a.str() + "*" + b.str() + "->" + nu.str() + " fits " + rep.poly.str();
              ++triples;
            }
  }
  return triples > 0 ? "" : "no top-degree triples";
}

std::string quotient() {
  AdeGroup g = make_cyclic(2);
  FHRing ring(FHContext::from(g.classes)), sym{FHContext{}};
  for (int da = 1; da <= 4; ++da)
    for (int db = 1; db <= 4; ++db)
      for (const auto& x : pfns_of_degree(da, 2))
        for (const auto& y : pfns_of_degree(db, 2)) {
          FHVector lhs = quotient_to_symmetric(ring.product(x, y), 0);
          FHVector rhs = sym.multiply(quotient_to_symmetric({{x, 1}}, 0), quotient_to_symmetric({{y, 1}}, 0));
          if (lhs != rhs) return mismatch(x.str() + "*" + y.str(), lhs, rhs);
        }
  return "";
}

std::string independence() {
  for (const char* spec : {"cyclic:3", "symmetric:3", "bd:12"}) {
    FHContext ctx = FHContext::from(parse_group_spec(spec).classes);
    for (int d = 0; d <= 4; ++d)
      for (const auto& lambda : pfns_of_degree(d, ctx.num_classes))
        for (ClassIndex c = 0; c < ctx.num_classes; ++c)
          for (int r = 1; d + r <= 5; ++r) {
            SymbolicVector prod = c == 0 ? single_cycle_product_trivial(ctx, lambda, r)
                                         : to_symbolic(single_cycle_product_nontrivial(ctx, lambda, r, c));
            try {
              require_zeta_free(rescaled_product(prod, lambda, single_cycle(r, c), ctx));
            } catch (const Error& e) {
              return std::string(spec) + " " + lambda.str() + "*" + single_cycle(r, c).str() + ": " + e.what();
            }
          }
  }
  FHRing a(FHContext::from(make_binary_dihedral(24).classes));
  FHRing b(FHContext::from(make_binary_polyhedral(Polyhedral::BI).classes));
  GroupComparison cmp = compare_groups(a, b, split_preserving_bijection(a.context(), b.context()), 4);
  if (!cmp.equal) return "BD24 vs BI: " + cmp.witness;
  return "";
}

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

std::string properties() {
  // compositions
  for (int total = 1; total <= 10; ++total)
    for (int size = 0; size < total; ++size)
      for (const Partition& mu : partitions_of(size)) {
        const int r = total - size;
        if (r < mu.length()) continue;
        BigInt sum = 0;
        for (int s = 1; s < total; ++s) {
          if (p_count(mu, r, s) != p_count(mu, r, total - s)) return "p symmetry " + mu.str();
          sum += q_count(mu, r, s);
        }
        if (sum != BigInt(mu.size()) * factorial(r)) return "q sum " + mu.str();
      }
  // filtration: a = 0 above ‖λ‖+‖μ‖
  struct Case {
    const char* spec;
    int n;
  };
  for (auto [spec, n] : {Case{"trivial", 5}, Case{"cyclic:2", 4}, Case{"cyclic:3", 3}, Case{"symmetric:3", 3}}) {
    AdeGroup g = parse_group_spec(spec);
    WreathContext ctx(g.group, g.classes);
    std::vector<ClassPartitionMap> types;
    for (int d = 0; d <= n; ++d)
      for (const auto& m : pfns_of_degree(d, g.classes.size()))
        if (realizable_threshold(m, 0) <= n) types.push_back(m);
    for (const auto& a : types)
      for (const auto& b : types)
        for (const auto& [nu, c] : convolve(ctx, n, a, b).coeffs)
          if (nu.degree() > a.degree() + b.degree()) return std::string(spec) + " filtration " + a.str() + b.str();
  }
  // support equality when degrees add, all of (Z/2)_n, n <= 4
  AdeGroup z2 = make_cyclic(2);
  WreathContext zctx(z2.group, z2.classes);
  for (int n = 1; n <= 4; ++n) {
    std::vector<WreathElement> all;
    for (int m = 0; m <= n; ++m)
      for (const auto& mu : pfns_of_degree(m, 2))
        enumerate_class(zctx, n, mu, [&](const WreathElement& x) { all.push_back(x); });
    for (const auto& x : all)
      for (const auto& y : all) {
        WreathElement xy = multiply(z2.group, x, y);
        if (degree(zctx, xy) == degree(zctx, x) + degree(zctx, y) &&
            support(z2.group, {x, y}) != support(z2.group, {xy}))
          return "support equality fails at n=" + std::to_string(n);
      }
  }
  // pair counts on 20 random triples
  std::mt19937 rng(2024);
  int triples = 0;
  for (const char* spec : {"cyclic:2", "cyclic:3", "symmetric:3", "trivial"}) {
    AdeGroup g = parse_group_spec(spec);
    WreathContext ctx(g.group, g.classes);
    const int n = g.group.order() == 6 ? 2 : (g.group.order() == 1 ? 5 : 3);
    std::vector<ClassPartitionMap> types;
    for (int d = 0; d <= n; ++d)
      for (const auto& m : pfns_of_degree(d, g.classes.size()))
        if (realizable_threshold(m, 0) <= n) types.push_back(m);
    std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
    for (int t = 0; t < 5; ++t, ++triples) {
      const auto &a = types[pick(rng)], &b = types[pick(rng)], &c = types[pick(rng)];
      if (!pair_count_identity_check(ctx, n, a, b, c)) return std::string(spec) + " pair count " + a.str() + b.str() + c.str();
    }
  }
  if (triples != 20) return "pair count sample size";
  // reduced expressions on 1000 random elements
  AdeGroup s3 = make_symmetric(3);
  WreathContext sctx(s3.group, s3.classes);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 8;
    WreathElement x = random_element(s3.group, n, rng);
    auto fs = reduced_expression(sctx, x);
    if (static_cast<int>(fs.size()) != degree(sctx, x)) return "reduced expression length";
    WreathElement acc = wreath_identity(s3.group, n);
    for (const auto& f : fs) acc = multiply(s3.group, acc, factor_element(s3.group, f, n));
    if (acc != x) return "reduced expression product";
  }
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_ms;
    Check check;
  };
  const Criterion criteria[] = {
      {"single-cycle square in Z/2 matches oracle at n=4,5", 1e3, example_square},
      {"mixed single-cycle products, both closed forms and oracle, s,r<=4", 30e3, example_mixed},
      {"f_(1)(3)^(1,1) is the constant 2 for trivial group", 5e3, constant_remark},
      {"closed forms equal oracle, degree<=5, four groups", 300e3, oracle_sweep},
      {"real-class table rows and tau-fixed classes", 10e3, table_rows},
      {"BT/BO/BI relations and BI element orders", 10e3, relations},
      {"polynomiality: C(x,2) with predictions, top degree constant", 60e3, polynomiality},
      {"quotient map is multiplicative on Z/2, factor degree<=4", 120e3, quotient},
      {"rescaled products zeta-free; BD24 and BI agree to degree 4", 300e3, independence},
      {"property suites", 300e3, properties},
  };
  int failures = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (detail.empty() && ms > c.limit_ms) detail = "over time limit";
    const bool ok = detail.empty();
    failures += !ok;
    std::printf("%s %2d %s (%.1f ms, limit %.0f ms)%s%s\n", ok ? "PASS" : "FAIL", index, c.name, ms, c.limit_ms,
                ok ? "" : ": ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
