#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wfh_cli/commands.hpp"
#include "wreathfh/error.hpp"

namespace wfh::cli {

using nlohmann::json;

namespace {

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const std::string& prefix, const json& v, std::ostream& os) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, x] : v.items()) flatten(prefix.empty() ? k : prefix + "." + k, x, os);
  } else if (v.is_array() && !v.empty() && !v.front().is_primitive()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(prefix + "." + std::to_string(i), v[i], os);
  } else {
    os << prefix << '\t' << scalar(v) << '\n';
  }
}

}  // namespace

std::string to_tsv(const CommandResult& r) {
  std::ostringstream os;
  os << "status\t" << (r.ok ? "ok" : "error") << '\n';
  os << "timing_ms\t" << r.timing_ms << '\n';
  os << "budget_used\t" << r.budget_used << '\n';
  // Terms get one line each with the PFN literal unquoted as the key.
  if (r.payload.is_object() && r.payload.contains("terms")) {
    json rest = r.payload;
    rest.erase("terms");
    flatten("", rest, os);
    for (const auto& [k, v] : r.payload["terms"].items()) {
      os << "term\t" << k << '\t';
      if (v.is_object())
        os << scalar(v["value"]) << '\t' << v.dump();
      else
        os << scalar(v);
      os << '\n';
    }
  } else {
    flatten("", r.payload, os);
  }
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Class algebras of wreath products and the Farahat-Higman ring", "wfh"};
  app.require_subcommand(1);
  bool tsv = false;
  app.add_flag("--tsv", tsv, "Tab-separated output");
  app.add_flag("--json", "JSON output (default)");

  auto* group = app.add_subcommand("group", "Group construction and class listing");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "Order, classes, centralizers and ADE data");
  std::string group_spec = "trivial";
  info->add_option("--group", group_spec, "Group spec")->required();

  ProductRequest preq;
  int n_value = 0;
  auto* product = app.add_subcommand("product", "Product of two class sums");
  product->add_option("--group", preq.group, "Group spec");
  product->add_option("--mode", preq.mode, "full | graded | fh")
      ->check(CLI::IsMember({"full", "graded", "fh"}));
  auto* n_opt = product->add_option("--n", n_value, "Rank n of the wreath product")->check(CLI::NonNegativeNumber);
  product->add_option("--lhs", preq.lhs, "PFN literal, e.g. {\"0\":[2,1]}");
  product->add_option("--rhs", preq.rhs, "PFN literal");
  product->add_option("--budget", preq.budget, "Group multiplication budget");
  product->add_option("--threads", preq.threads, "Worker threads")->check(CLI::PositiveNumber);
  product->add_option("--cache", preq.cache_path, "FH product cache file (fh mode)");

  VerifyOptions vopt;
  std::string suite, pair;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "tables | single-cycle | polynomiality | quotient | rescale | wreath-axioms")
      ->required();
  verify->add_option("--group", vopt.groups, "Group spec (repeatable)");
  verify->add_option("--max-deg", vopt.max_degree, "Degree bound");
  verify->add_option("--pair", pair, "Two group specs, a,b (rescale)");
  verify->add_option("--extra", vopt.extra_points, "Extra prediction points (polynomiality)");
  verify->add_option("--n", vopt.n, "Rank for wreath-axioms");
  verify->add_option("--budget", vopt.oracle.budget, "Group multiplication budget");
  verify->add_option("--threads", vopt.oracle.threads, "Worker threads")->check(CLI::PositiveNumber);

  for (auto* sub : {info, product, verify}) {
    sub->add_flag("--tsv", tsv, "Tab-separated output");
    sub->add_flag("--json", "JSON output (default)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CommandResult result;
  if (info->parsed()) {
    result = cmd_group_info(group_spec);
  } else if (product->parsed()) {
    if (*n_opt) preq.n = n_value;
    result = cmd_product(preq);
  } else {
    if (!pair.empty()) {
      auto comma = pair.find(',');
      if (comma == std::string::npos) {
        err << "--pair expects two group specs separated by a comma\n";
        return kUsage;
      }
      vopt.pair_a = pair.substr(0, comma);
      vopt.pair_b = pair.substr(comma + 1);
    }
    result = cmd_verify(suite, vopt);
  }
  if (tsv)
    out << to_tsv(result);
  else
    out << result.to_json().dump(2) << '\n';
  if (!result.ok) err << scalar(result.payload.value("message", json("error"))) << '\n';
  return result.exit_code;
}

}  // namespace wfh::cli
