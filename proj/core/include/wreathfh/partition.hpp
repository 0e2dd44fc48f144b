#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "wreathfh/group.hpp"
#include "wreathfh/numeric.hpp"

namespace wfh {

/// Integer partition kept in canonical form: parts weakly decreasing, no zeros.
class Partition {
 public:
  Partition() = default;
  /// Sorts and drops zeros. Throws Error{Precondition} on a negative part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  /// |λ|
  int size() const noexcept { return size_; }
  /// ℓ(λ)
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int multiplicity(int i) const;
  /// part -> m_part, parts ascending
  std::map<int, int> multiplicities() const;
  /// Distinct part values, descending.
  std::vector<int> distinct_parts() const;

  void add_part(int part);
  /// Throws Error{NotContained} if `part` is absent.
  void remove_part(int part);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  /// "(3,2,1)"; the empty partition prints as "()".
  std::string str() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition union_of(const Partition& a, const Partition& b);
/// Multiset difference; throws Error{NotContained} unless contains(a, b).
Partition subtract(const Partition& a, const Partition& b);
bool contains(const Partition& a, const Partition& b);
/// Dominance order: |a| = |b| and every partial sum of a is >= that of b.
bool dominates(const Partition& a, const Partition& b);

/// z_λ = ∏ i^{m_i} m_i!
BigInt z_of(const Partition& lambda);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Distinct sub-multisets μ ⊆ λ with ℓ(μ) <= max_length.
std::vector<Partition> sub_partitions(const Partition& lambda, int max_length);

/// Partition-valued function on conjugacy classes. Empty partitions are never
/// stored, so equality and ordering are those of the canonical sparse form.
class ClassPartitionMap {
 public:
  ClassPartitionMap() = default;
  ClassPartitionMap(std::initializer_list<std::pair<const ClassIndex, Partition>> init);

  const std::map<ClassIndex, Partition>& entries() const noexcept { return entries_; }
  /// ρ(c); the empty partition when c is absent.
  const Partition& at(ClassIndex c) const;
  void set(ClassIndex c, Partition p);
  void add_part(ClassIndex c, int part);
  void remove_part(ClassIndex c, int part);

  /// ‖ρ‖ = Σ_c |ρ(c)|
  int degree() const;
  /// ℓ(ρ) = Σ_c ℓ(ρ(c))
  int length() const;
  bool empty() const noexcept { return entries_.empty(); }
  ClassIndex max_class() const { return entries_.empty() ? -1 : entries_.rbegin()->first; }

  friend bool operator==(const ClassPartitionMap&, const ClassPartitionMap&) = default;
  friend std::strong_ordering operator<=>(const ClassPartitionMap& a, const ClassPartitionMap& b) {
    return a.entries_ <=> b.entries_;
  }

  /// "{0:(2,1),2:(1)}"
  std::string str() const;

 private:
  std::map<ClassIndex, Partition> entries_;
};

struct PfnHash {
  std::size_t operator()(const ClassPartitionMap& m) const noexcept;
};

ClassPartitionMap union_of(const ClassPartitionMap& a, const ClassPartitionMap& b);
/// Classwise subtraction; throws Error{NotContained}.
ClassPartitionMap subtract(const ClassPartitionMap& a, const ClassPartitionMap& b);
/// The single-cycle type (r)_c.
ClassPartitionMap single_cycle(int r, ClassIndex c);

/// Z_ρ = ∏_c z_{ρ(c)} ζ_c^{ℓ(ρ(c))}. Throws Error{UnknownClass}.
BigInt big_Z(const ClassPartitionMap& rho, const std::vector<std::int64_t>& zeta);

/// μ ≥ λ: μ(c⁰) ⊊ λ(c⁰), or |μ(c)| = |λ(c)| and μ(c) ⊵ λ(c) for every c.
/// Throws Error{DegreeMismatch} unless ‖μ‖ = ‖λ‖.
bool pfn_order_ge(const ClassPartitionMap& mu, const ClassPartitionMap& lambda,
                  ClassIndex identity_class);

/// All partition-valued functions of degree d on classes 0..num_classes-1.
std::vector<ClassPartitionMap> pfns_of_degree(int d, int num_classes);

/// μ̃ = (μ_1+1, ..., μ_ℓ+1, 1^{r-ℓ}). Throws Error{TooShort} if r < ℓ(μ).
Partition padded(const Partition& mu, int r);

/// Number of distinct arrangements of μ̃ whose partial sums all avoid s.
/// Zero unless 0 < s < |μ|+r. Throws TooShort, or RangeTooLarge if r > 10.
BigInt p_count(const Partition& mu, int r, int s);
/// p_count counted with multiplicity: (r-ℓ(μ))!·∏ m_i(μ)!·p.
BigInt q_count(const Partition& mu, int r, int s);

}  // namespace wfh
