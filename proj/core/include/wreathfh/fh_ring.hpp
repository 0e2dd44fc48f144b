#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wreathfh/class_algebra.hpp"
#include "wreathfh/group.hpp"
#include "wreathfh/numeric.hpp"
#include "wreathfh/partition.hpp"

namespace wfh {

/// The class data the FH ring depends on: class count, c⁰, inversion and ζ_c.
struct FHContext {
  int num_classes = 1;
  ClassIndex identity_class = 0;
  std::vector<ClassIndex> inv_class{0};
  std::vector<std::int64_t> zeta{1};

  static FHContext from(const ClassTable& t);
  /// Key of the orbit {c, c̄}.
  ClassIndex orbit(ClassIndex c) const { return std::min(c, inv_class[c]); }
  /// Stable description of the data above, used to key cache files.
  std::string fingerprint() const;
};

/// ∏_o ζ_o^{e_o/2}: orbit key -> twice the exponent. Zero exponents are dropped.
using ZetaMonomial = std::map<ClassIndex, int>;

/// Polynomial in the formal symbols ζ_c^{1/2} with rational coefficients.
/// Single-cycle products only ever produce one monomial per basis element.
class SymbolicCoeff {
 public:
  SymbolicCoeff() = default;
  SymbolicCoeff(Rational value, ZetaMonomial mono = {});

  const std::map<ZetaMonomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// True when every term carries no ζ symbol.
  bool is_numeric() const;
  /// Value with ζ substituted. Throws Error{ExponentResidue} on a half-integral exponent.
  Rational evaluate(const FHContext& ctx) const;
  /// Square of the value (well defined for a monomial). Throws Precondition otherwise.
  Rational squared_value(const FHContext& ctx) const;

  SymbolicCoeff& operator+=(const SymbolicCoeff& o);
  SymbolicCoeff& operator*=(const ZetaMonomial& m);
  friend bool operator==(const SymbolicCoeff&, const SymbolicCoeff&) = default;

  nlohmann::json to_json() const;
  std::string str() const;

 private:
  std::map<ZetaMonomial, Rational> terms_;
};

using FHVector = std::map<ClassPartitionMap, Rational>;
using SymbolicVector = std::map<ClassPartitionMap, SymbolicCoeff>;

void add_term(FHVector& v, const ClassPartitionMap& key, const Rational& coeff);
void add_term(SymbolicVector& v, const ClassPartitionMap& key, const SymbolicCoeff& coeff);

/// K_λ·K_{(r)_c} for c ≠ c⁰, r >= 1. Throws Error{BadCycle}.
FHVector single_cycle_product_nontrivial(const FHContext& ctx, const ClassPartitionMap& lambda, int r,
                                         ClassIndex c);
/// K_λ·K_{(r)_{c⁰}} with ζ kept symbolic; r = 0 returns K_λ.
SymbolicVector single_cycle_product_trivial(const FHContext& ctx, const ClassPartitionMap& lambda, int r);

FHVector specialize(const SymbolicVector& v, const FHContext& ctx);
SymbolicVector to_symbolic(const FHVector& v);

/// a_{λμ}^{λ∪μ} = ∏_{r,c} C(m_r(λ(c)) + m_r(μ(c)), m_r(λ(c))).
BigInt concat_constant(const ClassPartitionMap& lambda, const ClassPartitionMap& mu);

/// A product of single-cycle generators, as a sorted list of (r, c).
using GeneratorWord = std::vector<std::pair<int, ClassIndex>>;
using GeneratorPoly = std::map<GeneratorWord, Rational>;

/// Structure constants of 𝒢_Γ computed from the single-cycle closed forms.
/// Memoized; safe to call from several threads.
class FHRing {
 public:
  explicit FHRing(FHContext ctx);

  const FHContext& context() const noexcept { return ctx_; }

  /// K_{(r)_c}·K_λ by the matching closed form, ζ specialized.
  FHVector single_cycle(const ClassPartitionMap& lambda, int r, ClassIndex c);
  /// K_λ as a polynomial in the single-cycle generators (triangular inversion).
  GeneratorPoly express(const ClassPartitionMap& lambda);
  /// K_λ·K_μ. Throws Error{NonIntegralResult} if the result is not a
  /// non-negative integer vector.
  FHVector product(const ClassPartitionMap& lambda, const ClassPartitionMap& mu);
  FHVector multiply(const FHVector& a, const FHVector& b);

  std::size_t cached_products() const;
  /// Versioned JSON of the memoized products, keyed by the context fingerprint.
  nlohmann::json save_cache() const;
  /// Loads entries saved for the same fingerprint; returns the number loaded,
  /// or throws Error{GroupMismatch} if the fingerprint differs.
  std::size_t load_cache(const nlohmann::json& j);

 private:
  FHVector apply_word(const GeneratorWord& word, const ClassPartitionMap& mu);
  GeneratorPoly express_locked(const ClassPartitionMap& lambda);

  FHContext ctx_;
  mutable std::recursive_mutex mutex_;
  std::map<std::pair<ClassPartitionMap, ClassPartitionMap>, FHVector> products_;
  std::map<ClassPartitionMap, GeneratorPoly> expressions_;
  std::map<std::pair<ClassPartitionMap, std::pair<int, ClassIndex>>, FHVector> single_;
  std::set<ClassPartitionMap> in_progress_;
};

/// The ring map killing every K_λ with λ ≠ λ(c⁰); survivors are relabelled as
/// partitions at class 0 of the trivial group.
FHVector quotient_to_symmetric(const FHVector& v, ClassIndex identity_class);

/// Coefficients of v in the basis K̃_λ = ∏_{c≠c⁰} ζ_c^{ℓ(λ(c))/2} K_λ.
SymbolicVector to_rescaled_basis(const SymbolicVector& v, const FHContext& ctx);
/// Rescaled structure constants: K̃_λ·K̃_μ in the K̃ basis given product = K_λ·K_μ.
SymbolicVector rescaled_product(const SymbolicVector& product, const ClassPartitionMap& lambda,
                                const ClassPartitionMap& mu, const FHContext& ctx);
/// Throws Error{ExponentResidue} naming the first coefficient with a ζ symbol.
void require_zeta_free(const SymbolicVector& v);

/// Drops K_ν with ‖ν‖ + ℓ(ν(c⁰)) > n. Throws Error{NonIntegralResult}.
ClassVector specialize_to_n(const FHVector& v, int n, ClassIndex identity_class);

/// Class bijection A -> B preserving c⁰, the real/complex split and the
/// pairing c ↔ c̄. Throws Error{Precondition} unless |Γ_*| and |Γ_*^re| agree.
std::vector<ClassIndex> split_preserving_bijection(const FHContext& a, const FHContext& b);

ClassPartitionMap relabel(const ClassPartitionMap& m, const std::vector<ClassIndex>& bijection);

struct GroupComparison {
  bool equal = true;
  int products_checked = 0;
  std::string witness;  // first differing product when !equal
};

/// Compares all rescaled structure constants K̃_λ·K̃_μ with ‖λ‖+‖μ‖ <= max_degree.
/// Squares of the constants are compared, so no irrational arithmetic is needed.
GroupComparison compare_groups(FHRing& a, FHRing& b, const std::vector<ClassIndex>& bijection,
                               int max_degree);

std::string to_string(const FHVector& v);

}  // namespace wfh
