#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreathfh/class_algebra.hpp"
#include "wreathfh/numeric.hpp"

namespace wfh {

/// Σ_k c_k·C(x, k) with integer c_k: an integer-valued polynomial.
class IntegerValuedPoly {
 public:
  IntegerValuedPoly() = default;
  explicit IntegerValuedPoly(std::vector<BigInt> binomial_coeffs);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt operator()(const BigInt& x) const;

  friend bool operator==(const IntegerValuedPoly&, const IntegerValuedPoly&) = default;
  /// e.g. "2*C(x,0) + 1*C(x,2)"; "0" for the zero polynomial.
  std::string str() const;

 private:
  std::vector<BigInt> coeffs_;  // trailing zeros trimmed
};

using SamplePoint = std::pair<long, BigInt>;

/// Interpolates the points exactly (distinct n, any spacing) and returns the
/// binomial-basis form. Throws Error{InsufficientPoints} for an empty or
/// repeated sample, Error{NotIntegerValued} if a binomial coefficient is not
/// an integer.
IntegerValuedPoly fit(const std::vector<SamplePoint>& points);
/// As fit(), additionally requiring at least degree+1 points.
IntegerValuedPoly fit(const std::vector<SamplePoint>& points, int degree);

struct PolynomialityReport {
  int n0 = 0;             // first n where all three classes are realizable
  int degree_bound = 0;   // points used = degree_bound + 1
  std::optional<int> max_support;  // from max_pair_support when affordable
  std::vector<SamplePoint> fit_points;
  IntegerValuedPoly poly;
  std::vector<SamplePoint> checked;  // predictions confirmed by the oracle
};

/// Fits a_{λμ}^ν(n) on the window n0..n0+D and checks `extra_points` further
/// values against the oracle. D is max_pair_support when it fits the budget,
/// else |N(K_λ)| + |N(K_μ)| - |N(K_ν)|. Throws Error{Mismatch} naming the
/// first n where prediction and oracle differ, or where the fitted degree
/// exceeds the support bound.
PolynomialityReport verify_polynomiality(const WreathContext& ctx, const ClassPartitionMap& lambda,
                                         const ClassPartitionMap& mu, const ClassPartitionMap& nu,
                                         int extra_points, const OracleOptions& opt = {});

}  // namespace wfh
