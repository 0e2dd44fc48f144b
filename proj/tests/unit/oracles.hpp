#pragma once

// Naive reference implementations used only by the tests. Nothing here calls
// into the library beyond FiniteGroup::mul/inv, so agreement is meaningful.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "wreathfh/group.hpp"
#include "wreathfh/partition.hpp"
#include "wreathfh/wreath.hpp"

namespace oracle {

using wfh::FiniteGroup;

/// Conjugation orbits by brute force; returns class id per element, with ids
/// assigned in order of smallest element.
inline std::vector<int> conjugacy_labels(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    if (label[a] >= 0) continue;
    for (int h = 0; h < n; ++h) label[g.mul(g.mul(h, a), g.inv(h))] = next;
    ++next;
  }
  return label;
}

inline int centralizer_order(const FiniteGroup& g, int a) {
  int c = 0;
  for (int h = 0; h < g.order(); ++h) c += g.mul(h, a) == g.mul(a, h);
  return c;
}

/// All elements of Γ_n, sigma 0-based.
inline std::vector<wfh::WreathElement> all_elements(const FiniteGroup& g, int n) {
  std::vector<wfh::WreathElement> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> digits(n, 0);
    while (true) {
      out.push_back({n, digits, perm});
      int i = 0;
      while (i < n && ++digits[i] == g.order()) digits[i++] = 0;
      if (i == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// (g,σ) acting on Γ × {0..n-1} by (h, i) ↦ (g_{σ(i)} h, σ(i)), as a permutation.
inline std::vector<int> as_permutation(const FiniteGroup& g, const wfh::WreathElement& x) {
  const int m = g.order();
  std::vector<int> p(static_cast<std::size_t>(m) * x.n);
  for (int i = 0; i < x.n; ++i)
    for (int h = 0; h < m; ++h) {
      int j = x.sigma[i];
      p[i * m + h] = j * m + g.mul(x.g[j], h);
    }
  return p;
}

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline wfh::WreathElement naive_multiply(const FiniteGroup& g, const wfh::WreathElement& x,
                                          const wfh::WreathElement& y) {
  wfh::WreathElement z{x.n, std::vector<int>(x.n), std::vector<int>(x.n)};
  for (int j = 0; j < x.n; ++j) {
    z.sigma[j] = x.sigma[y.sigma[j]];
    z.g[x.sigma[y.sigma[j]]] = g.mul(x.g[x.sigma[y.sigma[j]]], y.g[y.sigma[j]]);
  }
  return z;
}

/// Modified type with classes labelled by `labels` (class of the identity
/// must be `c0`).
inline wfh::ClassPartitionMap naive_modified_type(const FiniteGroup& g, const std::vector<int>& labels,
                                                  const wfh::WreathElement& x, int c0) {
  wfh::ClassPartitionMap out;
  std::vector<bool> seen(x.n, false);
  for (int s = 0; s < x.n; ++s) {
    if (seen[s]) continue;
    int len = 0, prod = g.identity(), i = s;
    while (!seen[i]) {
      seen[i] = true;
      prod = g.mul(x.g[i], prod);
      i = x.sigma[i];
      ++len;
    }
    int c = labels[prod];
    if (c == c0) {
      if (len > 1) out.add_part(c, len - 1);
    } else {
      out.add_part(c, len);
    }
  }
  return out;
}

/// Whole class algebra of Γ_n by exhaustive pair multiplication:
/// a[λ][μ][ν] for the modified types.
struct ClassAlgebra {
  std::map<wfh::ClassPartitionMap, std::vector<wfh::WreathElement>> classes;
  std::map<wfh::ClassPartitionMap, int> type_index;

  long structure_constant(const FiniteGroup& g, const wfh::ClassPartitionMap& lambda, const wfh::ClassPartitionMap& mu,
                          const wfh::ClassPartitionMap& nu) const {
    auto a = classes.find(lambda), b = classes.find(mu), z = classes.find(nu);
    if (a == classes.end() || b == classes.end() || z == classes.end()) return 0;
    const auto& target = z->second.front();
    std::set<std::vector<int>> mu_set;
    for (const auto& y : b->second) {
      std::vector<int> key = y.g;
      key.insert(key.end(), y.sigma.begin(), y.sigma.end());
      mu_set.insert(key);
    }
    long count = 0;
    for (const auto& x : a->second) {
      // y = x⁻¹ z
      wfh::WreathElement xi{x.n, std::vector<int>(x.n), std::vector<int>(x.n)};
      for (int i = 0; i < x.n; ++i) {
        xi.sigma[x.sigma[i]] = i;
        xi.g[i] = g.inv(x.g[x.sigma[i]]);
      }
      auto y = naive_multiply(g, xi, target);
      std::vector<int> key = y.g;
      key.insert(key.end(), y.sigma.begin(), y.sigma.end());
      count += mu_set.count(key);
    }
    return count;
  }
};

inline ClassAlgebra build_class_algebra(const FiniteGroup& g, const std::vector<int>& labels, int c0, int n) {
  ClassAlgebra ca;
  for (auto& x : all_elements(g, n)) ca.classes[naive_modified_type(g, labels, x, c0)].push_back(x);
  return ca;
}

/// q(μ, r, s) by running over all r! orderings of the parts of μ̃ (with
/// multiplicity) and p(μ, r, s) over the distinct ones.
inline std::pair<long, long> composition_counts(const std::vector<int>& mu, int r, int s) {
  std::vector<int> tilde(r, 1);
  for (std::size_t i = 0; i < mu.size(); ++i) tilde[i] = mu[i] + 1;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  long q = 0;
  std::set<std::vector<int>> distinct;
  do {
    std::vector<int> seq(r);
    int partial = 0;
    bool hits = false;
    for (int k = 0; k < r; ++k) {
      seq[k] = tilde[idx[k]];
      partial += seq[k];
      hits = hits || partial == s;
    }
    if (!hits) {
      ++q;
      distinct.insert(seq);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return {static_cast<long>(distinct.size()), q};
}

}  // namespace oracle
