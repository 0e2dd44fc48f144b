#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "wreathfh/group.hpp"
#include "wreathfh/partition.hpp"

namespace wfh {

/// Element (g, σ) of Γ_n. Storage is 0-based: g[i] sits at position i+1 and
/// sigma[i] = σ(i+1)-1. Cycles, supports and literals use 1-based positions.
struct WreathElement {
  int n = 0;
  std::vector<Element> g;
  std::vector<int> sigma;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// Γ together with its class data; the context every wreath operation needs.
struct WreathContext {
  const FiniteGroup* group;
  const ClassTable* classes;

  WreathContext(const FiniteGroup& g, const ClassTable& c) : group(&g), classes(&c) {}
  ClassIndex identity_class() const { return classes->identity_class; }
};

struct CycleDatum {
  std::vector<int> support;  // (i_1 ... i_k), 1-based, minimal position first
  Element product;           // g_{i_k} ⋯ g_{i_1}
  ClassIndex product_class;
};

WreathElement wreath_identity(const FiniteGroup& group, int n);
/// Appends identity entries and fixed points up to size n (n >= x.n).
WreathElement embed(const FiniteGroup& group, const WreathElement& x, int n);
/// Checks shapes, element range and that sigma is a bijection.
void validate(const FiniteGroup& group, const WreathElement& x);

/// (g,σ)(h,τ) = (g·σ(h), στ); the smaller operand is embedded first.
WreathElement multiply(const FiniteGroup& group, const WreathElement& x, const WreathElement& y);
WreathElement inverse(const FiniteGroup& group, const WreathElement& x);

std::vector<CycleDatum> cycles(const WreathContext& ctx, const WreathElement& x);
ClassPartitionMap type_of(const WreathContext& ctx, const WreathElement& x);
ClassPartitionMap modified_type_of(const WreathContext& ctx, const WreathElement& x);
int degree(const WreathContext& ctx, const WreathElement& x);

/// ρ̃ from ρ: subtract one from each part at c⁰.
ClassPartitionMap to_modified(const ClassPartitionMap& full, ClassIndex identity_class);
/// ρ from ρ̃ inside Γ_n. Throws Error{TooSmall} if n < realizable_threshold(μ).
ClassPartitionMap to_full(const ClassPartitionMap& modified, int n, ClassIndex identity_class);
/// |N(K_μ)| = ‖μ‖ + ℓ(μ(c⁰)): the least n with K_μ(n) ≠ 0.
int realizable_threshold(const ClassPartitionMap& modified, ClassIndex identity_class);

/// N(x_1, ..., x_r), 1-based.
std::set<int> support(const FiniteGroup& group, const std::vector<WreathElement>& xs);

/// Either a marked transposition (i →^g j) = ((g at j, g⁻¹ at i), (i j)) or a
/// one-point insertion g^{(i)}.
struct ReducedFactor {
  enum class Kind { Transposition, Insertion } kind;
  int i;
  int j;  // unused for insertions
  Element g;

  friend bool operator==(const ReducedFactor&, const ReducedFactor&) = default;
};

WreathElement factor_element(const FiniteGroup& group, const ReducedFactor& f, int n);
/// Cycle-by-cycle factorization of length ‖x‖ whose product is x.
std::vector<ReducedFactor> reduced_expression(const WreathContext& ctx, const WreathElement& x);

/// Deterministic representative of K_μ(n): consecutive blocks per cycle, each
/// cycle product being the class representative placed on the block's last
/// position. Throws Error{NotRealizable}.
WreathElement canonical_representative(const WreathContext& ctx, int n,
                                       const ClassPartitionMap& modified);

/// |K_μ(n)| = |Γ|ⁿ n! / Z_ρ, zero when μ is not realizable in Γ_n.
BigInt class_size(const WreathContext& ctx, int n, const ClassPartitionMap& modified);

struct EnumerateShard {
  int index = 0;
  int count = 1;
};

/// Visits every element of K_μ(n) exactly once; nothing when μ is not
/// realizable. The visited reference is only valid during the callback.
/// With a shard, only the branches assigned to it are visited, so the shards
/// 0..count-1 together cover the class exactly once.
void enumerate_class(const WreathContext& ctx, int n, const ClassPartitionMap& modified,
                     const std::function<void(const WreathElement&)>& visit,
                     EnumerateShard shard = {});

/// Reusable scratch for fast modified-type signatures in inner loops.
class TypeSignature {
 public:
  /// Sorted codes (class, cycle length) of the cycles that contribute to the
  /// modified type; equal signatures <=> equal modified types.
  const std::vector<std::uint32_t>& compute(const WreathContext& ctx, const WreathElement& x);
  static std::vector<std::uint32_t> of(const ClassPartitionMap& modified, ClassIndex identity_class);
  static ClassPartitionMap decode(const std::vector<std::uint32_t>& sig, ClassIndex identity_class);

 private:
  std::vector<std::uint32_t> sig_;
  std::vector<char> seen_;
};

/// Product into a preallocated result (x and y of equal n).
void multiply_into(const FiniteGroup& group, const WreathElement& x, const WreathElement& y,
                   WreathElement& out);

}  // namespace wfh
