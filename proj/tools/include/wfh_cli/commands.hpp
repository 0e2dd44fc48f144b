#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "wreathfh/verify.hpp"

namespace wfh::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct CommandResult {
  bool ok = true;
  nlohmann::json payload;
  double timing_ms = 0;
  std::uint64_t budget_used = 0;
  int exit_code = kOk;

  nlohmann::json to_json() const;
};

CommandResult cmd_group_info(const std::string& spec);

struct ProductRequest {
  std::string group = "trivial";
  std::string mode = "fh";  // full | graded | fh
  std::optional<int> n;
  std::string lhs = "{}";
  std::string rhs = "{}";
  std::uint64_t budget = 100'000'000;
  int threads = 1;
  std::string cache_path;  // fh mode only; empty disables the cache
};

CommandResult cmd_product(const ProductRequest& req);

CommandResult cmd_verify(const std::string& suite, const VerifyOptions& opt);

/// Renders a result as tab-separated lines (status line first).
std::string to_tsv(const CommandResult& r);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wfh::cli
