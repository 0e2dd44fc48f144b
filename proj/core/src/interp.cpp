#include "wreathfh/interp.hpp"

#include <algorithm>
#include <set>

#include "wreathfh/error.hpp"

namespace wfh {

IntegerValuedPoly::IntegerValuedPoly(std::vector<BigInt> binomial_coeffs) : coeffs_(std::move(binomial_coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntegerValuedPoly::operator()(const BigInt& x) const {
  BigInt v = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v += coeffs_[k] * binomial_signed(x, static_cast<unsigned>(k));
  return v;
}

std::string IntegerValuedPoly::str() const {
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += coeffs_[k].str() + "*C(x," + std::to_string(k) + ")";
  }
  return s.empty() ? "0" : s;
}

IntegerValuedPoly fit(const std::vector<SamplePoint>& points) {
  if (points.empty()) throw Error(Errc::InsufficientPoints, "no sample points");
  std::set<long> xs;
  for (const auto& [x, v] : points)
    if (!xs.insert(x).second) throw Error(Errc::InsufficientPoints, "repeated sample at n = " + std::to_string(x));

  // Newton divided differences.
  const std::size_t m = points.size();
  std::vector<Rational> dd;
  for (const auto& [x, v] : points) dd.emplace_back(v);
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);

  auto eval = [&](long t) {
    Rational v = dd[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) v = v * Rational(t - points[i].first) + dd[i];
    return v;
  };

  // Binomial coefficients are the forward differences at 0.
  std::vector<Rational> values;
  for (std::size_t t = 0; t < m; ++t) values.push_back(eval(static_cast<long>(t)));
  std::vector<BigInt> coeffs;
  for (std::size_t k = 0; k < m; ++k) {
    Rational c = values[0];
    if (!is_integral(c))
      throw Error(Errc::NotIntegerValued, "binomial coefficient " + std::to_string(k) + " is " + to_string(c));
    coeffs.push_back(to_integer(c));
    for (std::size_t t = 0; t + 1 < values.size(); ++t) values[t] = values[t + 1] - values[t];
    values.pop_back();
  }
  return IntegerValuedPoly(std::move(coeffs));
}

IntegerValuedPoly fit(const std::vector<SamplePoint>& points, int degree) {
  if (static_cast<int>(points.size()) < degree + 1)
    throw Error(Errc::InsufficientPoints, "degree " + std::to_string(degree) + " needs " +
                                              std::to_string(degree + 1) + " points, got " +
                                              std::to_string(points.size()));
  return fit(points);
}

PolynomialityReport verify_polynomiality(const WreathContext& ctx, const ClassPartitionMap& lambda,
                                         const ClassPartitionMap& mu, const ClassPartitionMap& nu,
                                         int extra_points, const OracleOptions& opt) {
  const ClassIndex c0 = ctx.identity_class();
  const int tl = realizable_threshold(lambda, c0), tm = realizable_threshold(mu, c0),
            tn = realizable_threshold(nu, c0);
  PolynomialityReport rep;
  rep.n0 = std::max({tl, tm, tn, 1});
  rep.degree_bound = std::max(0, tl + tm - tn);
  try {
    rep.max_support = max_pair_support(ctx, lambda, mu, nu, opt);
    rep.degree_bound = std::max(0, *rep.max_support);
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
  }

  auto oracle = [&](int n) { return structure_constant(ctx, n, lambda, mu, nu, opt); };
  for (int n = rep.n0; n <= rep.n0 + rep.degree_bound; ++n) rep.fit_points.emplace_back(n, oracle(n));
  rep.poly = fit(rep.fit_points, rep.degree_bound);
  if (rep.max_support && rep.poly.degree() > std::max(*rep.max_support, 0))
    throw Error(Errc::Mismatch, "fitted degree " + std::to_string(rep.poly.degree()) + " exceeds support bound " +
                                    std::to_string(*rep.max_support));
  for (int i = 1; i <= extra_points; ++i) {
    const int n = rep.n0 + rep.degree_bound + i;
    BigInt actual = oracle(n);
    BigInt predicted = rep.poly(n);
    if (actual != predicted)
      throw Error(Errc::Mismatch, "at n = " + std::to_string(n) + " predicted " + predicted.str() + ", oracle " +
                                      actual.str());
    rep.checked.emplace_back(n, actual);
  }
  return rep;
}

}  // namespace wfh
