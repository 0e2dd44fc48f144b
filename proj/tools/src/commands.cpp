#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>

#include "wfh_cli/commands.hpp"
#include "wreathfh/catalog.hpp"
#include "wreathfh/class_algebra.hpp"
#include "wreathfh/error.hpp"
#include "wreathfh/fh_ring.hpp"
#include "wreathfh/literals.hpp"

namespace wfh::cli {

using nlohmann::json;

json CommandResult::to_json() const {
  return {{"status", ok ? "ok" : "error"},
          {"payload", payload},
          {"timing_ms", timing_ms},
          {"budget_used", std::to_string(budget_used)}};
}

namespace {

CommandResult timed(const std::function<void(CommandResult&)>& body) {
  CommandResult r;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const Error& e) {
    r.ok = false;
    r.payload = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    r.exit_code = e.code() == Errc::BudgetExceeded ? kBudget : kUsage;
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

const char* family_name(AdeFamily f) {
  switch (f) {
    case AdeFamily::A: return "A";
    case AdeFamily::D: return "D";
    case AdeFamily::E6: return "E6";
    case AdeFamily::E7: return "E7";
    case AdeFamily::E8: return "E8";
  }
  return "?";
}

json terms_json(const ClassVector& v) {
  json terms = json::object();
  for (const auto& [k, c] : v.coeffs) terms[pfn_literal(k)] = to_string(c);
  return terms;
}

void check_classes(const ClassPartitionMap& m, const ClassTable& t, const char* which) {
  for (const auto& [c, p] : m.entries())
    if (c >= t.size())
      throw Error(Errc::UnknownClass, std::string(which) + " uses class " + std::to_string(c) + " but the group has " +
                                          std::to_string(t.size()) + " classes");
}

}  // namespace

CommandResult cmd_group_info(const std::string& spec) {
  return timed([&](CommandResult& r) {
    AdeGroup g = parse_group_spec(spec);
    const ClassTable& t = g.classes;
    RealComplexSplit split = real_complex_split(t);
    json classes = json::array();
    for (ClassIndex c = 0; c < t.size(); ++c) {
      classes.push_back({{"index", c},
                         {"size", std::to_string(t.classes[c].size())},
                         {"zeta", std::to_string(t.zeta[c])},
                         {"representative", g.group.labels()[t.representative(c)]},
                         {"inverse_class", t.inv_class[c]}});
    }
    json pairs = json::array();
    for (auto [a, b] : split.complex_pairs) pairs.push_back({a, b});
    r.payload = {{"group", g.name},
                 {"order", std::to_string(g.group.order())},
                 {"num_classes", t.size()},
                 {"identity_class", t.identity_class},
                 {"classes", classes},
                 {"real_classes", split.real_classes},
                 {"complex_classes", split.complex_classes},
                 {"complex_pairs", pairs}};
    if (g.is_ade) {
      Table2Row row = table2_row(g);
      json dynkin = json::array();
      for (const auto& v : g.dynkin) dynkin.push_back({{"label", v.label}, {"class", v.class_index}});
      json edges = json::array();
      for (auto [a, b] : g.edges) edges.push_back({a, b});
      r.payload["family"] = family_name(g.family);
      r.payload["table2"] = {row.num_classes, row.num_complex, row.num_real, row.tau_order};
      r.payload["dynkin"] = {{"vertices", dynkin}, {"edges", edges}, {"tau", g.tau}};
      r.payload["tau_fixed_classes"] = tau_fixed_classes(g);
    }
  });
}

CommandResult cmd_product(const ProductRequest& req) {
  std::atomic<std::uint64_t> used{0};
  CommandResult res = timed([&](CommandResult& r) {
    AdeGroup g = parse_group_spec(req.group);
    const ClassPartitionMap lambda = parse_pfn(req.lhs), mu = parse_pfn(req.rhs);
    check_classes(lambda, g.classes, "lhs");
    check_classes(mu, g.classes, "rhs");
    const ClassIndex c0 = g.classes.identity_class;
    r.payload = {{"group", g.name}, {"mode", req.mode}, {"lhs", pfn_literal(lambda)}, {"rhs", pfn_literal(mu)}};
    FHContext fctx = FHContext::from(g.classes);

    if (req.mode == "full" || req.mode == "graded") {
      if (!req.n) throw Error(Errc::ParseError, "--n is required for mode " + req.mode);
      const int n = *req.n;
      r.payload["n"] = n;
      OracleOptions opt;
      opt.budget = req.budget;
      opt.threads = req.threads;
      opt.used = &used;
      WreathContext wctx(g.group, g.classes);
      ClassVector full = convolve(wctx, n, lambda, mu, opt);
      if (req.mode == "full") {
        r.payload["terms"] = terms_json(full);
        return;
      }
      const int top = lambda.degree() + mu.degree();
      ClassVector graded{n, {}};
      json dropped = json::array();
      for (const auto& [k, c] : full.coeffs) {
        if (k.degree() == top)
          graded.coeffs.emplace(k, c);
        else
          dropped.push_back({{"pfn", pfn_literal(k)}, {"reason", "lower degree"}});
      }
      // Top-degree terms of the stable product that K_ν(n) = 0 hides.
      FHRing ring(fctx);
      for (const auto& [k, c] : ring.product(lambda, mu))
        if (realizable_threshold(k, c0) > n)
          dropped.push_back({{"pfn", pfn_literal(k)}, {"reason", "not realizable at n"}, {"stable_coeff", to_string(c)}});
      r.payload["terms"] = terms_json(graded);
      r.payload["dropped"] = dropped;
      return;
    }

    if (req.mode != "fh") throw Error(Errc::ParseError, "unknown mode '" + req.mode + "'");
    FHRing ring(fctx);
    if (!req.cache_path.empty() && std::filesystem::exists(req.cache_path)) {
      std::ifstream in(req.cache_path);
      json cache;
      try {
        cache = json::parse(in);
      } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, "cache file: " + std::string(e.what()));
      }
      r.payload["cache_loaded"] = ring.load_cache(cache);
    }
    // A single-cycle factor keeps ζ symbolic; otherwise the recursion yields numbers.
    SymbolicVector sym;
    bool symbolic = false;
    auto try_single = [&](const ClassPartitionMap& single, const ClassPartitionMap& other) {
      if (symbolic || single.length() != 1) return;
      const auto& [c, p] = *single.entries().begin();
      const int len = p.parts().front();
      sym = c == c0 ? single_cycle_product_trivial(fctx, other, len)
                    : to_symbolic(single_cycle_product_nontrivial(fctx, other, len, c));
      symbolic = true;
    };
    try_single(mu, lambda);
    try_single(lambda, mu);
    FHVector numeric = symbolic ? specialize(sym, fctx) : ring.product(lambda, mu);
    if (!symbolic) sym = to_symbolic(numeric);
    json terms = json::object();
    for (const auto& [k, c] : sym) {
      json t = c.to_json();
      auto it = numeric.find(k);
      t["value"] = it == numeric.end() ? "0" : to_string(it->second);
      terms[pfn_literal(k)] = t;
    }
    r.payload["terms"] = terms;
    if (!req.cache_path.empty()) {
      if (!symbolic) {
        std::ofstream out(req.cache_path);
        out << ring.save_cache().dump(1) << '\n';
      }
      r.payload["cache_entries"] = ring.cached_products();
    }
  });
  res.budget_used = used.load();
  return res;
}

CommandResult cmd_verify(const std::string& suite, const VerifyOptions& opt) {
  std::atomic<std::uint64_t> used{0};
  VerifyOptions o = opt;
  o.oracle.used = &used;
  CommandResult res = timed([&](CommandResult& r) {
    SuiteReport rep = run_suite(suite, o);
    r.payload = rep.to_json();
    if (!rep.passed()) r.exit_code = kVerifyFailed;
  });
  res.budget_used = used.load();
  return res;
}

}  // namespace wfh::cli
