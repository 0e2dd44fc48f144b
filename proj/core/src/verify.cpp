#include "wreathfh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "wreathfh/catalog.hpp"
#include "wreathfh/error.hpp"
#include "wreathfh/fh_ring.hpp"
#include "wreathfh/interp.hpp"
#include "wreathfh/wreath.hpp"

namespace wfh {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"ms", c.ms}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return {{"suite", suite}, {"passed", passed()}, {"checks", arr}};
}

namespace {

// Runs `body`; an empty return string means the check passed.
void check(SuiteReport& rep, std::string name, const std::function<std::string()>& body) {
  CheckResult res;
  res.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  try {
    res.detail = body();
    res.passed = res.detail.empty();
  } catch (const Error& e) {
    res.detail = e.what();
  }
  res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rep.checks.push_back(std::move(res));
}

std::vector<std::string> groups_or(const VerifyOptions& opt, std::vector<std::string> fallback) {
  return opt.groups.empty() ? fallback : opt.groups;
}

int degree_or(const VerifyOptions& opt, int fallback) { return opt.max_degree < 0 ? fallback : opt.max_degree; }

std::string row_str(const Table2Row& r) {
  return "(" + std::to_string(r.num_classes) + "," + std::to_string(r.num_complex) + "," +
         std::to_string(r.num_real) + "," + std::to_string(r.tau_order) + ")";
}

std::string relation_failures(const AdeGroup& g) {
  const FiniteGroup& grp = g.group;
  auto gen = [&](const char* name) { return g.generators.at(name); };
  std::string bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad += (bad.empty() ? "" : "; ") + what;
  };
  switch (g.family) {
    case AdeFamily::A:
      expect(grp.power(gen("A"), grp.order()) == grp.identity(), "A^n != 1");
      expect(grp.element_order(gen("A")) == grp.order(), "A does not generate");
      break;
    case AdeFamily::D: {
      const Element A = gen("A"), B = gen("B"), Z = gen("Z");
      expect(grp.power(A, g.rank_param) == Z, "A^n != Z");
      expect(grp.power(B, 2) == Z, "B^2 != Z");
      expect(grp.power(grp.mul(A, B), 2) == Z, "(AB)^2 != Z");
      break;
    }
    default: {
      const int k = g.family == AdeFamily::E6 ? 3 : g.family == AdeFamily::E7 ? 4 : 5;
      const int order = g.family == AdeFamily::E6 ? 24 : g.family == AdeFamily::E7 ? 48 : 120;
      const Element A = gen("A"), B = gen("B"), C = gen("C"), Z = gen("Z");
      expect(grp.order() == order, "order " + std::to_string(grp.order()));
      expect(grp.power(A, k) == Z, "A^k != Z");
      expect(grp.power(B, 3) == Z, "B^3 != Z");
      expect(grp.power(C, 2) == Z, "C^2 != Z");
    }
  }
  if (g.generators.count("Z")) {
    const Element Z = gen("Z");
    expect(Z != grp.identity() && grp.mul(Z, Z) == grp.identity(), "Z is not an involution");
  }
  return bad;
}

// (λ, r, c) with ‖λ‖ + r <= max_degree, r >= 1.
template <class F>
void for_each_single_cycle(int num_classes, int max_degree, F f) {
  for (int d = 0; d < max_degree; ++d)
    for (const auto& lambda : pfns_of_degree(d, num_classes))
      for (int r = 1; d + r <= max_degree; ++r)
        for (ClassIndex c = 0; c < num_classes; ++c) f(lambda, r, c);
}

std::string compare_vectors(const FHVector& closed, const ClassVector& oracle) {
  FHVector o;
  for (const auto& [k, v] : oracle.coeffs) add_term(o, k, Rational(v));
  if (o == closed) return "";
  return "closed form " + to_string(closed) + " vs oracle " + to_string(o);
}

}  // namespace

SuiteReport verify_tables() {
  SuiteReport rep{"tables", {}};
  struct Row {
    const char* spec;
    Table2Row expected;
  };
  const Row rows[] = {
      {"cyclic:5", {5, 4, 0, 2}}, {"cyclic:6", {6, 4, 1, 2}}, {"bd:24", {9, 0, 8, 1}}, {"bd:12", {6, 2, 3, 2}},
      {"bt", {7, 4, 2, 2}},       {"bo", {8, 0, 7, 1}},       {"bi", {9, 0, 8, 1}},
  };
  for (const auto& row : rows) {
    AdeGroup g;
    check(rep, std::string(row.spec) + " construction", [&] {
      g = parse_group_spec(row.spec);
      return std::string();
    });
    if (!rep.checks.back().passed) continue;
    check(rep, std::string(row.spec) + " class counts and tau order", [&] {
      Table2Row got = table2_row(g);
      return got == row.expected ? std::string() : "got " + row_str(got) + ", expected " + row_str(row.expected);
    });
    check(rep, std::string(row.spec) + " tau-fixed vertices are the real classes", [&] {
      return tau_fixed_classes(g) == real_complex_split(g.classes).real_classes ? std::string()
                                                                                 : std::string("sets differ");
    });
    check(rep, std::string(row.spec) + " Dynkin labelling", [&] {
      std::string out;
      for (const auto& p : validate_dynkin(g)) out += p + "; ";
      return out;
    });
    check(rep, std::string(row.spec) + " relations", [&] { return relation_failures(g); });
    if (std::string(row.spec) == "bi") {
      check(rep, "bi representative orders", [&] {
        const FiniteGroup& grp = g.group;
        const Element A = g.generators.at("A"), B = g.generators.at("B"), C = g.generators.at("C");
        std::vector<int> got = {grp.element_order(A),
                                grp.element_order(grp.power(A, 2)),
                                grp.element_order(grp.power(A, 3)),
                                grp.element_order(grp.power(A, 4)),
                                grp.element_order(B),
                                grp.element_order(grp.power(B, 2)),
                                grp.element_order(C)};
        return got == std::vector<int>{10, 5, 10, 5, 6, 3, 4} ? std::string() : std::string("orders differ");
      });
    }
    if (std::string(row.spec) == "bt") {
      check(rep, "bt class sizes", [&] {
        std::vector<int> sizes;
        for (const auto& c : g.classes.classes) sizes.push_back(static_cast<int>(c.size()));
        std::sort(sizes.begin(), sizes.end());
        return sizes == std::vector<int>{1, 1, 4, 4, 4, 4, 6} ? std::string() : std::string("sizes differ");
      });
    }
  }
  return rep;
}

SuiteReport verify_single_cycle(const VerifyOptions& opt) {
  SuiteReport rep{"single-cycle", {}};
  const int max_deg = degree_or(opt, 4);
  for (const auto& spec : groups_or(opt, {"trivial", "cyclic:2", "cyclic:3", "symmetric:3"})) {
    AdeGroup g = parse_group_spec(spec);
    WreathContext wctx(g.group, g.classes);
    FHContext ctx = FHContext::from(g.classes);
    const ClassIndex c0 = ctx.identity_class;
    int total = 0;
    check(rep, spec + " closed forms equal the oracle up to degree " + std::to_string(max_deg), [&] {
      std::string fail;
      for_each_single_cycle(ctx.num_classes, max_deg, [&](const ClassPartitionMap& lambda, int r, ClassIndex c) {
        if (!fail.empty()) return;
        const ClassPartitionMap cyc = single_cycle(r, c);
        FHVector closed = c == c0 ? specialize(single_cycle_product_trivial(ctx, lambda, r), ctx)
                                  : single_cycle_product_nontrivial(ctx, lambda, r, c);
        const int n = minimal_admissible_n(lambda, cyc, c0);
        std::string diff = compare_vectors(closed, graded_product(wctx, n, lambda, cyc, opt.oracle));
        if (!diff.empty()) fail = "K_" + lambda.str() + " K_" + cyc.str() + " at n = " + std::to_string(n) + ": " + diff;
        ++total;
      });
      return fail;
    });
    check(rep, spec + " triangularity of single-cycle products", [&] {
      std::string fail;
      for_each_single_cycle(ctx.num_classes, max_deg, [&](const ClassPartitionMap& lambda, int r, ClassIndex c) {
        if (!fail.empty()) return;
        const ClassPartitionMap top = union_of(lambda, single_cycle(r, c));
        FHVector v = c == c0 ? specialize(single_cycle_product_trivial(ctx, lambda, r), ctx)
                             : single_cycle_product_nontrivial(ctx, lambda, r, c);
        auto diag = v.find(top);
        if (diag == v.end() || diag->second <= 0) {
          fail = "no positive diagonal term in K_" + lambda.str() + " K_" + single_cycle(r, c).str();
          return;
        }
        if (diag->second != Rational(concat_constant(lambda, single_cycle(r, c)))) {
          fail = "diagonal of K_" + lambda.str() + " K_" + single_cycle(r, c).str() + " is not the concatenation constant";
          return;
        }
        for (const auto& [nu, a] : v)
          if (!pfn_order_ge(nu, top, c0)) fail = nu.str() + " is not above " + top.str();
      });
      return fail;
    });
  }
  return rep;
}

SuiteReport verify_polynomiality_suite(const VerifyOptions& opt) {
  SuiteReport rep{"polynomiality", {}};
  const int max_deg = degree_or(opt, 2);
  for (const auto& spec : groups_or(opt, {"trivial", "cyclic:2"})) {
    AdeGroup g = parse_group_spec(spec);
    WreathContext wctx(g.group, g.classes);
    const ClassIndex c0 = g.classes.identity_class;
    for (int d1 = 1; 2 * d1 <= max_deg; ++d1) {
      for (int d2 = d1; d1 + d2 <= max_deg; ++d2) {
        for (const auto& lambda : pfns_of_degree(d1, g.classes.size())) {
          for (const auto& mu : pfns_of_degree(d2, g.classes.size())) {
            if (d1 == d2 && mu < lambda) continue;
            const int n = minimal_admissible_n(lambda, mu, c0);
            ClassVector full;
            check(rep, spec + " K_" + lambda.str() + " K_" + mu.str() + " support", [&] {
              full = convolve(wctx, n, lambda, mu, opt.oracle);
              return std::string();
            });
            for (const auto& [nu, a] : full.coeffs) {
              check(rep, spec + " f^" + nu.str() + " for K_" + lambda.str() + " K_" + mu.str(), [&] {
                PolynomialityReport r = verify_polynomiality(wctx, lambda, mu, nu, opt.extra_points, opt.oracle);
                if (nu.degree() == d1 + d2 && r.poly.degree() != 0)
                  return "top-degree term fitted degree " + std::to_string(r.poly.degree());
                return std::string();
              });
            }
          }
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_quotient(const VerifyOptions& opt) {
  SuiteReport rep{"quotient", {}};
  const int max_deg = degree_or(opt, 4);
  FHRing trivial(FHContext{});
  for (const auto& spec : groups_or(opt, {"cyclic:2"})) {
    AdeGroup g = parse_group_spec(spec);
    FHRing ring(FHContext::from(g.classes));
    const ClassIndex c0 = g.classes.identity_class;
    check(rep, spec + " quotient map is multiplicative on factors of degree <= " + std::to_string(max_deg), [&] {
      std::vector<ClassPartitionMap> basis;
      for (int d = 1; d <= max_deg; ++d)
        for (auto& m : pfns_of_degree(d, g.classes.size())) basis.push_back(m);
      int pairs = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
          const auto& lambda = basis[i];
          const auto& mu = basis[j];
          FHVector lhs = quotient_to_symmetric(ring.product(lambda, mu), c0);
          FHVector pl = quotient_to_symmetric({{lambda, Rational(1)}}, c0);
          FHVector pm = quotient_to_symmetric({{mu, Rational(1)}}, c0);
          FHVector rhs = trivial.multiply(pl, pm);
          ++pairs;
          if (lhs != rhs)
            return "phi(K_" + lambda.str() + " K_" + mu.str() + ") = " + to_string(lhs) + " but product of images is " +
                   to_string(rhs);
        }
      }
      return pairs > 0 ? std::string() : std::string("no pairs checked");
    });
  }
  return rep;
}

SuiteReport verify_rescale(const VerifyOptions& opt) {
  SuiteReport rep{"rescale", {}};
  const int max_deg = degree_or(opt, 4);
  for (const auto& spec : groups_or(opt, {"cyclic:3", "symmetric:3", "bd:12"})) {
    AdeGroup g = parse_group_spec(spec);
    FHContext ctx = FHContext::from(g.classes);
    check(rep, spec + " rescaled single-cycle products are zeta-free up to degree " + std::to_string(max_deg), [&] {
      std::string fail;
      for_each_single_cycle(ctx.num_classes, max_deg, [&](const ClassPartitionMap& lambda, int r, ClassIndex c) {
        if (!fail.empty()) return;
        SymbolicVector v = c == ctx.identity_class
                               ? single_cycle_product_trivial(ctx, lambda, r)
                               : to_symbolic(single_cycle_product_nontrivial(ctx, lambda, r, c));
        try {
          require_zeta_free(rescaled_product(v, lambda, single_cycle(r, c), ctx));
        } catch (const Error& e) {
          fail = "K~_" + lambda.str() + " K~_" + single_cycle(r, c).str() + ": " + e.what();
        }
      });
      return fail;
    });
  }
  check(rep, opt.pair_a + " and " + opt.pair_b + " have equal rescaled constants up to degree " + std::to_string(max_deg),
        [&] {
          AdeGroup a = parse_group_spec(opt.pair_a), b = parse_group_spec(opt.pair_b);
          FHRing ra(FHContext::from(a.classes)), rb(FHContext::from(b.classes));
          auto bij = split_preserving_bijection(ra.context(), rb.context());
          GroupComparison cmp = compare_groups(ra, rb, bij, max_deg);
          return cmp.equal ? std::string() : "first difference at " + cmp.witness;
        });
  return rep;
}

SuiteReport verify_wreath_axioms(const VerifyOptions& opt) {
  SuiteReport rep{"wreath-axioms", {}};
  const int n = opt.n;
  for (const auto& spec : groups_or(opt, {"trivial", "cyclic:2", "symmetric:3"})) {
    AdeGroup g = parse_group_spec(spec);
    const FiniteGroup& grp = g.group;
    WreathContext ctx(grp, g.classes);
    std::mt19937_64 rng(0x5eed);
    auto random_element = [&] {
      WreathElement x = wreath_identity(grp, n);
      std::uniform_int_distribution<int> pick(0, grp.order() - 1);
      for (auto& e : x.g) e = pick(rng);
      std::shuffle(x.sigma.begin(), x.sigma.end(), rng);
      return x;
    };
    const int samples = 2000;
    check(rep, spec + " group axioms in Gamma_" + std::to_string(n), [&] {
      const WreathElement id = wreath_identity(grp, n);
      for (int t = 0; t < samples; ++t) {
        WreathElement x = random_element(), y = random_element(), z = random_element();
        if (multiply(grp, multiply(grp, x, y), z) != multiply(grp, x, multiply(grp, y, z))) return std::string("associativity");
        if (multiply(grp, x, id) != x || multiply(grp, id, x) != x) return std::string("identity");
        if (multiply(grp, x, inverse(grp, x)) != id) return std::string("inverse");
      }
      return std::string();
    });
    check(rep, spec + " degree is subadditive and supports merge on equality", [&] {
      for (int t = 0; t < samples; ++t) {
        WreathElement x = random_element(), y = random_element();
        WreathElement xy = multiply(grp, x, y);
        const int dx = degree(ctx, x), dy = degree(ctx, y), dxy = degree(ctx, xy);
        if (dxy > dx + dy) return "||xy|| > ||x|| + ||y|| for sample " + std::to_string(t);
        if (dxy == dx + dy && support(grp, {x, y}) != support(grp, {xy}))
          return "N(x,y) != N(xy) for sample " + std::to_string(t);
      }
      return std::string();
    });
    check(rep, spec + " modified type is a conjugation invariant", [&] {
      for (int t = 0; t < samples; ++t) {
        WreathElement x = random_element(), z = random_element();
        WreathElement c = multiply(grp, multiply(grp, z, x), inverse(grp, z));
        if (modified_type_of(ctx, c) != modified_type_of(ctx, x)) return "sample " + std::to_string(t);
      }
      return std::string();
    });
    check(rep, spec + " reduced expressions have length ||x||", [&] {
      for (int t = 0; t < samples; ++t) {
        WreathElement x = random_element();
        auto factors = reduced_expression(ctx, x);
        WreathElement p = wreath_identity(grp, n);
        for (const auto& f : factors) p = multiply(grp, p, factor_element(grp, f, n));
        if (p != x) return "product differs for sample " + std::to_string(t);
        if (static_cast<int>(factors.size()) != degree(ctx, x)) return "length differs for sample " + std::to_string(t);
      }
      return std::string();
    });
    check(rep, spec + " class enumeration matches class sizes", [&] {
      for (int d = 0; d <= n; ++d) {
        for (const auto& mu : pfns_of_degree(d, g.classes.size())) {
          BigInt count = 0;
          bool wrong_type = false;
          enumerate_class(ctx, n, mu, [&](const WreathElement& x) {
            if (count < 16 && modified_type_of(ctx, x) != mu) wrong_type = true;
            ++count;
          });
          if (wrong_type) return "K_" + mu.str() + " yields an element of another type";
          if (count != class_size(ctx, n, mu)) return "K_" + mu.str();
        }
      }
      return std::string();
    });
  }
  return rep;
}

std::vector<std::string> suite_names() {
  return {"tables", "single-cycle", "polynomiality", "quotient", "rescale", "wreath-axioms"};
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "tables") return verify_tables();
  if (name == "single-cycle") return verify_single_cycle(opt);
  if (name == "polynomiality") return verify_polynomiality_suite(opt);
  if (name == "quotient") return verify_quotient(opt);
  if (name == "rescale") return verify_rescale(opt);
  if (name == "wreath-axioms") return verify_wreath_axioms(opt);
  throw Error(Errc::ParseError, "unknown suite '" + name + "'");
}

}  // namespace wfh
