#include "wreathfh/class_algebra.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "wreathfh/error.hpp"

namespace wfh {

namespace {

using Signature = std::vector<std::uint32_t>;

void charge(const OracleOptions& opt, const BigInt& cost, const std::string& what) {
  std::uint64_t already = opt.used ? opt.used->load() : 0;
  if (cost + already > opt.budget)
    throw Error(Errc::BudgetExceeded, what + " needs about " + cost.str() +
                                          " group multiplications, budget is " + std::to_string(opt.budget));
  if (opt.used) opt.used->fetch_add(static_cast<std::uint64_t>(cost));
}

void require_realizable(const WreathContext& ctx, int n, const ClassPartitionMap& m) {
  for (const auto& [c, p] : m.entries())
    if (c < 0 || c >= ctx.classes->size())
      throw Error(Errc::UnknownClass, "class " + std::to_string(c) + " out of range in " + m.str());
  if (realizable_threshold(m, ctx.identity_class()) > n)
    throw Error(Errc::NotRealizable, m.str() + " is not realizable in n = " + std::to_string(n));
}

// Runs body(shard, tally) over `threads` shards and returns the per-shard tallies.
template <class Tally, class Body>
std::vector<Tally> run_sharded(int threads, Body body) {
  threads = std::max(1, threads);
  std::vector<Tally> tallies(threads);
  if (threads == 1) {
    body(EnumerateShard{0, 1}, tallies[0]);
    return tallies;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        body(EnumerateShard{t, threads}, tallies[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return tallies;
}

}  // namespace

int minimal_admissible_n(const ClassPartitionMap& lambda, const ClassPartitionMap& mu,
                         ClassIndex identity_class) {
  return realizable_threshold(lambda, identity_class) + realizable_threshold(mu, identity_class);
}

BigInt structure_constant_at(const WreathContext& ctx, const WreathElement& z,
                             const ClassPartitionMap& lambda, const ClassPartitionMap& mu,
                             const OracleOptions& opt) {
  const int n = z.n;
  require_realizable(ctx, n, lambda);
  require_realizable(ctx, n, mu);
  // Enumerate the smaller class; a_{λμ}^ν = a_{μλ}^ν.
  const bool swap = class_size(ctx, n, mu) < class_size(ctx, n, lambda);
  const ClassPartitionMap& outer = swap ? mu : lambda;
  const ClassPartitionMap& inner = swap ? lambda : mu;
  charge(opt, class_size(ctx, n, outer) * 3 * n, "structure constant");
  const Signature target = TypeSignature::of(inner, ctx.identity_class());

  auto tallies = run_sharded<std::uint64_t>(opt.threads, [&](EnumerateShard shard, std::uint64_t& count) {
    TypeSignature sig;
    WreathElement xinv, cofactor;
    enumerate_class(ctx, n, outer, [&](const WreathElement& x) {
      xinv = inverse(*ctx.group, x);
      multiply_into(*ctx.group, xinv, z, cofactor);
      if (sig.compute(ctx, cofactor) == target) ++count;
    }, shard);
  });
  BigInt total = 0;
  for (auto c : tallies) total += c;
  return total;
}

BigInt structure_constant(const WreathContext& ctx, int n, const ClassPartitionMap& lambda,
                          const ClassPartitionMap& mu, const ClassPartitionMap& nu,
                          const OracleOptions& opt) {
  require_realizable(ctx, n, nu);
  return structure_constant_at(ctx, canonical_representative(ctx, n, nu), lambda, mu, opt);
}

ClassVector convolve(const WreathContext& ctx, int n, const ClassPartitionMap& lambda,
                     const ClassPartitionMap& mu, const OracleOptions& opt) {
  require_realizable(ctx, n, lambda);
  require_realizable(ctx, n, mu);
  // Fix x0 in the larger class, enumerate the smaller one and tally the types
  // of x0·y; then |K_big|·count(ν) = a^ν·|K_ν|.
  const BigInt size_l = class_size(ctx, n, lambda), size_m = class_size(ctx, n, mu);
  const bool swap = size_l < size_m;
  const ClassPartitionMap& fixed = swap ? mu : lambda;
  const ClassPartitionMap& walked = swap ? lambda : mu;
  const BigInt& fixed_size = swap ? size_m : size_l;
  charge(opt, (swap ? size_l : size_m) * 2 * n, "convolution");
  const WreathElement x0 = canonical_representative(ctx, n, fixed);

  using Tally = std::map<Signature, std::uint64_t>;
  auto tallies = run_sharded<Tally>(opt.threads, [&](EnumerateShard shard, Tally& tally) {
    TypeSignature sig;
    WreathElement prod;
    enumerate_class(ctx, n, walked, [&](const WreathElement& y) {
      multiply_into(*ctx.group, x0, y, prod);
      const Signature& s = sig.compute(ctx, prod);
      auto it = tally.find(s);
      if (it == tally.end())
        tally.emplace(s, 1);
      else
        ++it->second;
    }, shard);
  });

  Tally merged;
  for (const auto& t : tallies)
    for (const auto& [s, c] : t) merged[s] += c;
  ClassVector out{n, {}};
  for (const auto& [s, c] : merged) {
    ClassPartitionMap nu = TypeSignature::decode(s, ctx.identity_class());
    BigInt num = fixed_size * c;
    BigInt den = class_size(ctx, n, nu);
    if (num % den != 0)
      throw Error(Errc::NonIntegralResult, "pair count not divisible by |K_" + nu.str() + "|");
    out.coeffs.emplace(std::move(nu), num / den);
  }
  return out;
}

ClassVector graded_product(const WreathContext& ctx, int n, const ClassPartitionMap& lambda,
                           const ClassPartitionMap& mu, const OracleOptions& opt) {
  ClassVector full = convolve(ctx, n, lambda, mu, opt);
  const int top = lambda.degree() + mu.degree();
  std::erase_if(full.coeffs, [top](const auto& kv) { return kv.first.degree() != top; });
  return full;
}

BigInt pair_count(const WreathContext& ctx, int n, const ClassPartitionMap& lambda,
                  const ClassPartitionMap& mu, const ClassPartitionMap& nu, const OracleOptions& opt) {
  require_realizable(ctx, n, lambda);
  require_realizable(ctx, n, mu);
  if (realizable_threshold(nu, ctx.identity_class()) > n) return 0;
  charge(opt, class_size(ctx, n, lambda) * class_size(ctx, n, mu) * 2 * n, "pair count");
  const Signature target = TypeSignature::of(nu, ctx.identity_class());
  auto tallies = run_sharded<std::uint64_t>(opt.threads, [&](EnumerateShard shard, std::uint64_t& count) {
    TypeSignature sig;
    WreathElement prod;
    enumerate_class(ctx, n, lambda, [&](const WreathElement& x) {
      enumerate_class(ctx, n, mu, [&](const WreathElement& y) {
        multiply_into(*ctx.group, x, y, prod);
        if (sig.compute(ctx, prod) == target) ++count;
      });
    }, shard);
  });
  BigInt total = 0;
  for (auto c : tallies) total += c;
  return total;
}

bool pair_count_identity_check(const WreathContext& ctx, int n, const ClassPartitionMap& lambda,
                               const ClassPartitionMap& mu, const ClassPartitionMap& nu,
                               const OracleOptions& opt) {
  const BigInt pairs = pair_count(ctx, n, lambda, mu, nu, opt);
  if (realizable_threshold(nu, ctx.identity_class()) > n) return pairs == 0;
  const BigInt a = structure_constant(ctx, n, lambda, mu, nu, opt);
  return pairs == a * class_size(ctx, n, nu);
}

int max_pair_support(const WreathContext& ctx, const ClassPartitionMap& lambda,
                     const ClassPartitionMap& mu, const ClassPartitionMap& nu,
                     const OracleOptions& opt) {
  const ClassIndex c0 = ctx.identity_class();
  const int n = minimal_admissible_n(lambda, mu, c0);
  require_realizable(ctx, n, lambda);
  require_realizable(ctx, n, mu);
  charge(opt, class_size(ctx, n, mu) * 3 * n, "max pair support");
  // Every pair is conjugate to one with x fixed, and |N(x, y)| is conjugation invariant.
  const WreathElement x0 = canonical_representative(ctx, n, lambda);
  const Signature target = TypeSignature::of(nu, c0);
  auto best = run_sharded<int>(opt.threads, [&](EnumerateShard shard, int& local) {
    local = -1;
    TypeSignature sig;
    WreathElement prod;
    enumerate_class(ctx, n, mu, [&](const WreathElement& y) {
      multiply_into(*ctx.group, x0, y, prod);
      if (sig.compute(ctx, prod) != target) return;
      int count = 0;
      for (int j = 0; j < n; ++j)
        if (x0.sigma[j] != j || x0.g[j] != ctx.group->identity() || y.sigma[j] != j ||
            y.g[j] != ctx.group->identity())
          ++count;
      local = std::max(local, count);
    }, shard);
  });
  int m = *std::max_element(best.begin(), best.end());
  return m < 0 ? -1 : m - realizable_threshold(nu, c0);
}

}  // namespace wfh
