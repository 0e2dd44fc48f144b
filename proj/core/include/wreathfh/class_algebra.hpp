#pragma once

#include <atomic>
#include <cstdint>
#include <map>

#include "wreathfh/numeric.hpp"
#include "wreathfh/partition.hpp"
#include "wreathfh/wreath.hpp"

namespace wfh {

/// Coefficients on the basis K_μ(n) of the class algebra of Γ_n, keyed by
/// modified type. Zero coefficients are never stored.
struct ClassVector {
  int n = 0;
  std::map<ClassPartitionMap, BigInt> coeffs;

  BigInt coeff(const ClassPartitionMap& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? BigInt(0) : it->second;
  }
  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

/// Enumeration budget and thread count shared by the brute-force routines.
/// `used` counts group multiplications and is updated by every call.
struct OracleOptions {
  std::uint64_t budget = 100'000'000;
  int threads = 1;
  std::atomic<std::uint64_t>* used = nullptr;
};

/// a_{λμ}^ν(n): fixes the canonical z ∈ K_ν(n) and counts x in the smaller of
/// K_λ(n), K_μ(n) whose cofactor lies in the other class.
/// Throws Error{NotRealizable|BudgetExceeded}.
BigInt structure_constant(const WreathContext& ctx, int n, const ClassPartitionMap& lambda,
                          const ClassPartitionMap& mu, const ClassPartitionMap& nu,
                          const OracleOptions& opt = {});

/// Same count with an explicit representative z of K_ν(n).
BigInt structure_constant_at(const WreathContext& ctx, const WreathElement& z,
                             const ClassPartitionMap& lambda, const ClassPartitionMap& mu,
                             const OracleOptions& opt = {});

/// Full product K_λ(n)·K_μ(n), lower-degree terms included.
ClassVector convolve(const WreathContext& ctx, int n, const ClassPartitionMap& lambda,
                     const ClassPartitionMap& mu, const OracleOptions& opt = {});

/// The terms of convolve with ‖ν‖ = ‖λ‖+‖μ‖.
ClassVector graded_product(const WreathContext& ctx, int n, const ClassPartitionMap& lambda,
                           const ClassPartitionMap& mu, const OracleOptions& opt = {});

/// Smallest n at which every top-degree term of K_λ·K_μ is visible.
int minimal_admissible_n(const ClassPartitionMap& lambda, const ClassPartitionMap& mu,
                         ClassIndex identity_class);

/// #{(x, y) ∈ K_λ(n) × K_μ(n) : xy ∈ K_ν(n)} by exhaustive pairs.
BigInt pair_count(const WreathContext& ctx, int n, const ClassPartitionMap& lambda,
                  const ClassPartitionMap& mu, const ClassPartitionMap& nu,
                  const OracleOptions& opt = {});

/// pair_count == a_{λμ}^ν(n)·|K_ν(n)|.
bool pair_count_identity_check(const WreathContext& ctx, int n, const ClassPartitionMap& lambda,
                               const ClassPartitionMap& mu, const ClassPartitionMap& nu,
                               const OracleOptions& opt = {});

/// max |N(x, y)| - |N(K_ν)| over pairs x ∈ K_λ, y ∈ K_μ with xy ∈ K_ν, inside
/// Γ_{n*} with n* = |N(K_λ)| + |N(K_μ)|. Returns -1 when no pair qualifies.
int max_pair_support(const WreathContext& ctx, const ClassPartitionMap& lambda,
                     const ClassPartitionMap& mu, const ClassPartitionMap& nu,
                     const OracleOptions& opt = {});

}  // namespace wfh
