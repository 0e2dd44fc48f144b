#include "wreathfh/fh_ring.hpp"

#include <algorithm>
#include <sstream>

#include "wreathfh/error.hpp"
#include "wreathfh/literals.hpp"
#include "wreathfh/wreath.hpp"

namespace wfh {

FHContext FHContext::from(const ClassTable& t) {
  FHContext ctx;
  ctx.num_classes = t.size();
  ctx.identity_class = t.identity_class;
  ctx.inv_class = t.inv_class;
  ctx.zeta = t.zeta;
  return ctx;
}

std::string FHContext::fingerprint() const {
  std::ostringstream s;
  s << "classes=" << num_classes << ";identity=" << identity_class << ";inv=";
  for (auto c : inv_class) s << c << ',';
  s << ";zeta=";
  for (auto z : zeta) s << z << ',';
  return s.str();
}

SymbolicCoeff::SymbolicCoeff(Rational value, ZetaMonomial mono) {
  std::erase_if(mono, [](const auto& kv) { return kv.second == 0; });
  if (value != 0) terms_.emplace(std::move(mono), std::move(value));
}

bool SymbolicCoeff::is_numeric() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.empty(); });
}

namespace {

Rational zeta_power(const FHContext& ctx, ClassIndex orbit, int exp) {
  Rational base(ctx.zeta.at(orbit));
  Rational r = 1;
  for (int i = 0; i < std::abs(exp); ++i) r *= base;
  return exp >= 0 ? r : Rational(1) / r;
}

}  // namespace

Rational SymbolicCoeff::evaluate(const FHContext& ctx) const {
  Rational total = 0;
  for (const auto& [mono, value] : terms_) {
    Rational v = value;
    for (auto [orbit, twice] : mono) {
      if (twice % 2 != 0)
        throw Error(Errc::ExponentResidue, "half-integral power of zeta_" + std::to_string(orbit) +
                                               " in " + str());
      v *= zeta_power(ctx, orbit, twice / 2);
    }
    total += v;
  }
  return total;
}

Rational SymbolicCoeff::squared_value(const FHContext& ctx) const {
  if (terms_.empty()) return 0;
  if (!is_monomial()) throw Error(Errc::Precondition, "squared_value needs a monomial, got " + str());
  const auto& [mono, value] = *terms_.begin();
  Rational v = value * value;
  for (auto [orbit, twice] : mono) v *= zeta_power(ctx, orbit, twice);
  return v;
}

SymbolicCoeff& SymbolicCoeff::operator+=(const SymbolicCoeff& o) {
  for (const auto& [mono, value] : o.terms_) {
    auto [it, inserted] = terms_.emplace(mono, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymbolicCoeff& SymbolicCoeff::operator*=(const ZetaMonomial& m) {
  std::map<ZetaMonomial, Rational> next;
  for (auto& [mono, value] : terms_) {
    ZetaMonomial prod = mono;
    for (auto [orbit, twice] : m) prod[orbit] += twice;
    std::erase_if(prod, [](const auto& kv) { return kv.second == 0; });
    next[prod] += value;
  }
  std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(next);
  return *this;
}

nlohmann::json SymbolicCoeff::to_json() const {
  if (terms_.empty()) return {{"coeff", "0"}, {"zeta", nlohmann::json::object()}};
  auto render = [](const ZetaMonomial& mono, const Rational& value) {
    nlohmann::json z = nlohmann::json::object();
    // ζ exponents are printed as halves when odd: "1/2", otherwise integers.
    for (auto [orbit, twice] : mono) {
      if (twice % 2 == 0)
        z[std::to_string(orbit)] = twice / 2;
      else
        z[std::to_string(orbit)] = std::to_string(twice) + "/2";
    }
    return nlohmann::json{{"coeff", to_string(value)}, {"zeta", z}};
  };
  if (is_monomial()) return render(terms_.begin()->first, terms_.begin()->second);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [mono, value] : terms_) arr.push_back(render(mono, value));
  return arr;
}

std::string SymbolicCoeff::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [mono, value] : terms_) {
    if (!s.empty()) s += " + ";
    s += to_string(value);
    for (auto [orbit, twice] : mono)
      s += "*z" + std::to_string(orbit) + "^" + (twice % 2 ? std::to_string(twice) + "/2" : std::to_string(twice / 2));
  }
  return s;
}

void add_term(FHVector& v, const ClassPartitionMap& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = v.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) v.erase(it);
  }
}

void add_term(SymbolicVector& v, const ClassPartitionMap& key, const SymbolicCoeff& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = v.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) v.erase(it);
  }
}

namespace {

BigInt mult_factorials(const Partition& mu) {
  BigInt w = 1;
  for (auto [i, m] : mu.multiplicities()) w *= factorial(static_cast<unsigned>(m));
  return w;
}

// λ with μ removed from λ(c⁰).
ClassPartitionMap remove_from_identity(const ClassPartitionMap& lambda, const Partition& mu, ClassIndex c0) {
  ClassPartitionMap t = lambda;
  t.set(c0, subtract(lambda.at(c0), mu));
  return t;
}

void check_class(const FHContext& ctx, ClassIndex c) {
  if (c < 0 || c >= ctx.num_classes) throw Error(Errc::UnknownClass, "class " + std::to_string(c) + " out of range");
}

void check_pfn(const FHContext& ctx, const ClassPartitionMap& m) {
  for (const auto& [c, p] : m.entries()) check_class(ctx, c);
}

}  // namespace

FHVector single_cycle_product_nontrivial(const FHContext& ctx, const ClassPartitionMap& lambda, int r,
                                         ClassIndex c) {
  check_pfn(ctx, lambda);
  check_class(ctx, c);
  if (c == ctx.identity_class) throw Error(Errc::BadCycle, "class must differ from the identity class");
  if (r < 1) throw Error(Errc::BadCycle, "(r)_c needs r >= 1 for c != c0");
  const ClassIndex c0 = ctx.identity_class;
  FHVector out;
  for (const Partition& mu : sub_partitions(lambda.at(c0), r)) {
    const int k = mu.size() + r;
    Rational coeff(BigInt(lambda.at(c).multiplicity(k) + 1) * k * factorial(r - 1),
                   factorial(r - mu.length()) * mult_factorials(mu));
    ClassPartitionMap target = remove_from_identity(lambda, mu, c0);
    target.add_part(c, k);
    add_term(out, target, coeff);
  }
  return out;
}

SymbolicVector single_cycle_product_trivial(const FHContext& ctx, const ClassPartitionMap& lambda, int r) {
  check_pfn(ctx, lambda);
  if (r < 0) throw Error(Errc::BadCycle, "(r)_c0 needs r >= 0");
  SymbolicVector out;
  if (r == 0) {
    out.emplace(lambda, SymbolicCoeff(1));
    return out;
  }
  const ClassIndex c0 = ctx.identity_class;
  const Partition& l0 = lambda.at(c0);
  auto zeta_of = [&](ClassIndex c) { return ZetaMonomial{{ctx.orbit(c), 2}}; };

  // I1
  for (const Partition& mu : sub_partitions(l0, r + 1)) {
    const int k = mu.size() + r;
    Rational coeff(BigInt(l0.multiplicity(k) + 1) * (k + 1) * factorial(r),
                   factorial(r + 1 - mu.length()) * mult_factorials(mu));
    ClassPartitionMap target = remove_from_identity(lambda, mu, c0);
    target.add_part(c0, k);
    add_term(out, target, SymbolicCoeff(coeff));
  }

  const auto subs = sub_partitions(l0, r);
  for (ClassIndex c = 0; c < ctx.num_classes; ++c) {
    if (c == c0) continue;
    const ClassIndex cbar = ctx.inv_class[c];
    const Partition& lc = lambda.at(c);
    for (const Partition& mu : subs) {
      const ClassPartitionMap base = remove_from_identity(lambda, mu, c0);
      const BigInt denom = factorial(r - mu.length()) * mult_factorials(mu);
      const int total = mu.size() + r;

      // I2
      for (int k : lc.distinct_parts()) {
        const int K = total + k;
        Rational coeff(BigInt(lc.multiplicity(K) + 1) * K * factorial(r), denom);
        ClassPartitionMap target = base;
        target.remove_part(c, k);
        target.add_part(c, K);
        add_term(out, target, SymbolicCoeff(coeff));
      }

      // I3: ordered c, 0 < s1 < s2
      for (int s1 = 1; 2 * s1 < total; ++s1) {
        const int s2 = total - s1;
        BigInt p = p_count(mu, r, s1);
        if (p == 0) continue;
        Rational coeff(BigInt(s1) * s2 * p * (lc.multiplicity(s1) + 1) *
                       (lambda.at(cbar).multiplicity(s2) + 1));
        ClassPartitionMap target = base;
        target.add_part(c, s1);
        target.add_part(cbar, s2);
        add_term(out, target, SymbolicCoeff(coeff, zeta_of(c)));
      }

      if (total % 2 != 0) continue;
      const int s = total / 2;
      BigInt p = p_count(mu, r, s);
      if (p == 0) continue;
      ClassPartitionMap target = base;
      target.add_part(c, s);
      target.add_part(cbar, s);
      if (cbar != c) {
        // I4: unordered pair {c, c̄}
        if (c > cbar) continue;
        Rational coeff(BigInt(s) * s * p * (lc.multiplicity(s) + 1) * (lambda.at(cbar).multiplicity(s) + 1));
        add_term(out, target, SymbolicCoeff(coeff, zeta_of(c)));
      } else {
        // I5
        Rational coeff(BigInt(s) * s * p * binomial(lc.multiplicity(s) + 2, 2));
        add_term(out, target, SymbolicCoeff(coeff, zeta_of(c)));
      }
    }
  }
  return out;
}

FHVector specialize(const SymbolicVector& v, const FHContext& ctx) {
  FHVector out;
  for (const auto& [k, c] : v) add_term(out, k, c.evaluate(ctx));
  return out;
}

SymbolicVector to_symbolic(const FHVector& v) {
  SymbolicVector out;
  for (const auto& [k, c] : v) add_term(out, k, SymbolicCoeff(c));
  return out;
}

BigInt concat_constant(const ClassPartitionMap& lambda, const ClassPartitionMap& mu) {
  BigInt a = 1;
  for (const auto& [c, p] : lambda.entries()) {
    for (auto [part, m] : p.multiplicities()) {
      const int other = mu.at(c).multiplicity(part);
      a *= binomial(static_cast<unsigned>(m + other), static_cast<unsigned>(m));
    }
  }
  return a;
}

FHRing::FHRing(FHContext ctx) : ctx_(std::move(ctx)) {}

FHVector FHRing::single_cycle(const ClassPartitionMap& lambda, int r, ClassIndex c) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(lambda, std::make_pair(r, c));
  if (auto it = single_.find(key); it != single_.end()) return it->second;
  FHVector v = c == ctx_.identity_class ? specialize(single_cycle_product_trivial(ctx_, lambda, r), ctx_)
                                        : single_cycle_product_nontrivial(ctx_, lambda, r, c);
  single_.emplace(std::move(key), v);
  return v;
}

GeneratorPoly FHRing::express(const ClassPartitionMap& lambda) {
  std::lock_guard lock(mutex_);
  return express_locked(lambda);
}

GeneratorPoly FHRing::express_locked(const ClassPartitionMap& lambda) {
  if (auto it = expressions_.find(lambda); it != expressions_.end()) return it->second;
  check_pfn(ctx_, lambda);
  GeneratorPoly poly;
  if (lambda.length() <= 1) {
    GeneratorWord word;
    for (const auto& [c, p] : lambda.entries()) word.emplace_back(p.parts().front(), c);
    poly.emplace(word, 1);
  } else {
    if (!in_progress_.insert(lambda).second)
      throw Error(Errc::Precondition, "triangular recursion revisits " + lambda.str());
    // Split off the smallest part of the last class: K_λ' K_{(r)_c} = d K_λ + Σ_{ν≠λ} a_ν K_ν.
    const auto& [c, part] = *lambda.entries().rbegin();
    const int r = part.parts().back();
    ClassPartitionMap rest = lambda;
    rest.remove_part(c, r);
    const FHVector g = single_cycle(rest, r, c);
    auto diag = g.find(lambda);
    if (diag == g.end() || diag->second <= 0)
      throw Error(Errc::Precondition, "no positive diagonal coefficient for " + lambda.str());
    const Rational d = diag->second;
    for (const auto& [word, coeff] : express_locked(rest)) {
      GeneratorWord w = word;
      w.emplace_back(r, c);
      std::sort(w.begin(), w.end());
      poly[w] += coeff / d;
    }
    for (const auto& [nu, a] : g) {
      if (nu == lambda) continue;
      for (const auto& [word, coeff] : express_locked(nu)) poly[word] -= a * coeff / d;
    }
    std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
    in_progress_.erase(lambda);
  }
  expressions_.emplace(lambda, poly);
  return poly;
}

FHVector FHRing::apply_word(const GeneratorWord& word, const ClassPartitionMap& mu) {
  FHVector v{{mu, Rational(1)}};
  for (const auto& [r, c] : word) {
    FHVector next;
    for (const auto& [key, coeff] : v)
      for (const auto& [t, a] : single_cycle(key, r, c)) add_term(next, t, coeff * a);
    v = std::move(next);
  }
  return v;
}

FHVector FHRing::product(const ClassPartitionMap& lambda, const ClassPartitionMap& mu) {
  std::lock_guard lock(mutex_);
  check_pfn(ctx_, lambda);
  check_pfn(ctx_, mu);
  // Expand the factor with fewer parts into generators; ties broken by order.
  const bool swap = mu.length() < lambda.length() || (mu.length() == lambda.length() && mu < lambda);
  const ClassPartitionMap& left = swap ? mu : lambda;
  const ClassPartitionMap& right = swap ? lambda : mu;
  auto key = std::make_pair(left, right);
  if (auto it = products_.find(key); it != products_.end()) return it->second;

  FHVector out;
  for (const auto& [word, coeff] : express_locked(left))
    for (const auto& [t, a] : apply_word(word, right)) add_term(out, t, coeff * a);
  for (const auto& [t, a] : out) {
    if (!is_integral(a) || a < 0)
      throw Error(Errc::NonIntegralResult, "coefficient " + to_string(a) + " of " + t.str() + " in K_" +
                                               lambda.str() + " K_" + mu.str());
    if (t.degree() != lambda.degree() + mu.degree())
      throw Error(Errc::NonIntegralResult, "inhomogeneous term " + t.str());
  }
  products_.emplace(std::move(key), out);
  return out;
}

FHVector FHRing::multiply(const FHVector& a, const FHVector& b) {
  FHVector out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      for (const auto& [t, c] : product(ka, kb)) add_term(out, t, ca * cb * c);
  return out;
}

std::size_t FHRing::cached_products() const {
  std::lock_guard lock(mutex_);
  return products_.size();
}

nlohmann::json FHRing::save_cache() const {
  std::lock_guard lock(mutex_);
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, v] : products_) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [t, c] : v) terms.push_back({pfn_to_json(t), to_string(c)});
    entries.push_back({{"lhs", pfn_to_json(key.first)}, {"rhs", pfn_to_json(key.second)}, {"terms", terms}});
  }
  return {{"format", "wreathfh-fh-cache"}, {"version", 1}, {"fingerprint", ctx_.fingerprint()},
          {"products", entries}};
}

std::size_t FHRing::load_cache(const nlohmann::json& j) {
  if (!j.is_object() || j.value("format", "") != "wreathfh-fh-cache" || j.value("version", 0) != 1)
    throw Error(Errc::ParseError, "not a version-1 FH cache");
  if (j.at("fingerprint").get<std::string>() != ctx_.fingerprint())
    throw Error(Errc::GroupMismatch, "cache was written for a different group");
  std::lock_guard lock(mutex_);
  std::size_t loaded = 0;
  for (const auto& e : j.at("products")) {
    FHVector v;
    for (const auto& term : e.at("terms"))
      add_term(v, pfn_from_json(term.at(0)), Rational(term.at(1).get<std::string>()));
    auto key = std::make_pair(pfn_from_json(e.at("lhs")), pfn_from_json(e.at("rhs")));
    if (products_.emplace(std::move(key), std::move(v)).second) ++loaded;
  }
  return loaded;
}

FHVector quotient_to_symmetric(const FHVector& v, ClassIndex identity_class) {
  FHVector out;
  for (const auto& [k, c] : v) {
    if (k.entries().size() > 1 || (!k.empty() && k.entries().begin()->first != identity_class)) continue;
    ClassPartitionMap t;
    t.set(0, k.at(identity_class));
    add_term(out, t, c);
  }
  return out;
}

namespace {

// ∏_{c≠c⁰} ζ_c^{sign·ℓ(λ(c))/2}
ZetaMonomial length_monomial(const ClassPartitionMap& lambda, const FHContext& ctx, int sign) {
  ZetaMonomial m;
  for (const auto& [c, p] : lambda.entries())
    if (c != ctx.identity_class) m[ctx.orbit(c)] += sign * p.length();
  return m;
}

}  // namespace

SymbolicVector to_rescaled_basis(const SymbolicVector& v, const FHContext& ctx) {
  SymbolicVector out;
  for (const auto& [k, c] : v) {
    SymbolicCoeff s = c;
    s *= length_monomial(k, ctx, -1);
    add_term(out, k, s);
  }
  return out;
}

SymbolicVector rescaled_product(const SymbolicVector& product, const ClassPartitionMap& lambda,
                                const ClassPartitionMap& mu, const FHContext& ctx) {
  SymbolicVector out = to_rescaled_basis(product, ctx);
  ZetaMonomial lm = length_monomial(lambda, ctx, 1);
  for (auto [o, e] : length_monomial(mu, ctx, 1)) lm[o] += e;
  for (auto& [k, c] : out) c *= lm;
  return out;
}

void require_zeta_free(const SymbolicVector& v) {
  for (const auto& [k, c] : v)
    if (!c.is_numeric()) throw Error(Errc::ExponentResidue, "coefficient of " + k.str() + " is " + c.str());
}

ClassVector specialize_to_n(const FHVector& v, int n, ClassIndex identity_class) {
  ClassVector out{n, {}};
  for (const auto& [k, c] : v) {
    if (realizable_threshold(k, identity_class) > n) continue;
    if (!is_integral(c)) throw Error(Errc::NonIntegralResult, "coefficient " + to_string(c) + " of " + k.str());
    out.coeffs.emplace(k, to_integer(c));
  }
  return out;
}

std::vector<ClassIndex> split_preserving_bijection(const FHContext& a, const FHContext& b) {
  auto split = [](const FHContext& x) {
    std::vector<ClassIndex> real;
    std::vector<std::pair<ClassIndex, ClassIndex>> pairs;
    for (ClassIndex c = 0; c < x.num_classes; ++c) {
      if (c == x.identity_class) continue;
      if (x.inv_class[c] == c)
        real.push_back(c);
      else if (c < x.inv_class[c])
        pairs.emplace_back(c, x.inv_class[c]);
    }
    return std::make_pair(real, pairs);
  };
  auto [ra, pa] = split(a);
  auto [rb, pb] = split(b);
  if (a.num_classes != b.num_classes || ra.size() != rb.size())
    throw Error(Errc::Precondition, "groups differ in |classes| (" + std::to_string(a.num_classes) + " vs " +
                                        std::to_string(b.num_classes) + ") or |real classes| (" +
                                        std::to_string(ra.size()) + " vs " + std::to_string(rb.size()) + ")");
  std::vector<ClassIndex> bij(a.num_classes, -1);
  bij[a.identity_class] = b.identity_class;
  for (std::size_t i = 0; i < ra.size(); ++i) bij[ra[i]] = rb[i];
  for (std::size_t i = 0; i < pa.size(); ++i) {
    bij[pa[i].first] = pb[i].first;
    bij[pa[i].second] = pb[i].second;
  }
  return bij;
}

ClassPartitionMap relabel(const ClassPartitionMap& m, const std::vector<ClassIndex>& bijection) {
  ClassPartitionMap out;
  for (const auto& [c, p] : m.entries()) out.set(bijection.at(c), p);
  return out;
}

GroupComparison compare_groups(FHRing& a, FHRing& b, const std::vector<ClassIndex>& bijection, int max_degree) {
  const FHContext& ca = a.context();
  const FHContext& cb = b.context();
  if (static_cast<int>(bijection.size()) != ca.num_classes || ca.num_classes != cb.num_classes)
    throw Error(Errc::Precondition, "bijection does not match the class counts");
  std::vector<std::vector<ClassPartitionMap>> by_degree;
  for (int d = 0; d <= max_degree; ++d) by_degree.push_back(pfns_of_degree(d, ca.num_classes));

  auto squared = [](const SymbolicVector& v, const FHContext& ctx, const std::vector<ClassIndex>* bij) {
    std::map<ClassPartitionMap, Rational> out;
    for (const auto& [k, c] : v) out.emplace(bij ? relabel(k, *bij) : k, c.squared_value(ctx));
    return out;
  };

  GroupComparison result;
  for (int d1 = 1; 2 * d1 <= max_degree; ++d1) {
    for (int d2 = d1; d1 + d2 <= max_degree; ++d2) {
      for (const auto& lambda : by_degree[d1]) {
        for (const auto& mu : by_degree[d2]) {
          if (d1 == d2 && mu < lambda) continue;
          const ClassPartitionMap lb = relabel(lambda, bijection), mb = relabel(mu, bijection);
          auto va = squared(rescaled_product(to_symbolic(a.product(lambda, mu)), lambda, mu, ca), ca, &bijection);
          auto vb = squared(rescaled_product(to_symbolic(b.product(lb, mb)), lb, mb, cb), cb, nullptr);
          ++result.products_checked;
          if (va != vb) {
            result.equal = false;
            result.witness = "K~_" + lambda.str() + " K~_" + mu.str();
            return result;
          }
        }
      }
    }
  }
  return result;
}

std::string to_string(const FHVector& v) {
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + " K" + k.str();
  }
  return s.empty() ? "0" : s;
}

}  // namespace wfh
