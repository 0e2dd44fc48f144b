#include "wreathfh/wreath.hpp"

#include <algorithm>

#include "wreathfh/error.hpp"

namespace wfh {

WreathElement wreath_identity(const FiniteGroup& group, int n) {
  WreathElement x{n, std::vector<Element>(n, group.identity()), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) x.sigma[i] = i;
  return x;
}

WreathElement embed(const FiniteGroup& group, const WreathElement& x, int n) {
  if (n < x.n) throw Error(Errc::Precondition, "cannot embed into a smaller n");
  WreathElement y = x;
  y.n = n;
  y.g.resize(n, group.identity());
  for (int i = x.n; i < n; ++i) y.sigma.push_back(i);
  return y;
}

void validate(const FiniteGroup& group, const WreathElement& x) {
  if (x.n < 0 || static_cast<int>(x.g.size()) != x.n || static_cast<int>(x.sigma.size()) != x.n)
    throw Error(Errc::BadElement, "g and sigma must both have length n");
  std::vector<char> hit(x.n, 0);
  for (int i = 0; i < x.n; ++i) {
    if (x.g[i] < 0 || x.g[i] >= group.order())
      throw Error(Errc::BadElement, "group element out of range at position " + std::to_string(i + 1));
    if (x.sigma[i] < 0 || x.sigma[i] >= x.n || hit[x.sigma[i]]++)
      throw Error(Errc::BadElement, "sigma is not a permutation");
  }
}

void multiply_into(const FiniteGroup& group, const WreathElement& x, const WreathElement& y,
                   WreathElement& out) {
  const int n = x.n;
  out.n = n;
  out.g.resize(n);
  out.sigma.resize(n);
  // result.g[σ(j)] = g[σ(j)]·h[j]
  for (int j = 0; j < n; ++j) {
    const int sj = x.sigma[j];
    out.g[sj] = group.mul(x.g[sj], y.g[j]);
    out.sigma[j] = x.sigma[y.sigma[j]];
  }
}

WreathElement multiply(const FiniteGroup& group, const WreathElement& x, const WreathElement& y) {
  WreathElement out;
  if (x.n == y.n) {
    multiply_into(group, x, y, out);
  } else if (x.n < y.n) {
    multiply_into(group, embed(group, x, y.n), y, out);
  } else {
    multiply_into(group, x, embed(group, y, x.n), out);
  }
  return out;
}

WreathElement inverse(const FiniteGroup& group, const WreathElement& x) {
  WreathElement y{x.n, std::vector<Element>(x.n), std::vector<int>(x.n)};
  for (int j = 0; j < x.n; ++j) {
    y.g[j] = group.inv(x.g[x.sigma[j]]);
    y.sigma[x.sigma[j]] = j;
  }
  return y;
}

std::vector<CycleDatum> cycles(const WreathContext& ctx, const WreathElement& x) {
  std::vector<CycleDatum> out;
  std::vector<char> seen(x.n, 0);
  for (int i = 0; i < x.n; ++i) {
    if (seen[i]) continue;
    CycleDatum c;
    Element p = ctx.group->identity();
    for (int j = i; !seen[j]; j = x.sigma[j]) {
      seen[j] = 1;
      c.support.push_back(j + 1);
      p = ctx.group->mul(x.g[j], p);
    }
    c.product = p;
    c.product_class = ctx.classes->class_of[p];
    out.push_back(std::move(c));
  }
  return out;
}

ClassPartitionMap type_of(const WreathContext& ctx, const WreathElement& x) {
  ClassPartitionMap rho;
  for (const auto& c : cycles(ctx, x)) rho.add_part(c.product_class, static_cast<int>(c.support.size()));
  return rho;
}

ClassPartitionMap to_modified(const ClassPartitionMap& full, ClassIndex identity_class) {
  ClassPartitionMap m = full;
  std::vector<int> parts;
  for (int p : full.at(identity_class).parts()) parts.push_back(p - 1);
  m.set(identity_class, Partition(std::move(parts)));
  return m;
}

int realizable_threshold(const ClassPartitionMap& modified, ClassIndex identity_class) {
  return modified.degree() + modified.at(identity_class).length();
}

ClassPartitionMap to_full(const ClassPartitionMap& modified, int n, ClassIndex identity_class) {
  const int need = realizable_threshold(modified, identity_class);
  if (need > n)
    throw Error(Errc::TooSmall, modified.str() + " needs n >= " + std::to_string(need) +
                                    ", got " + std::to_string(n));
  ClassPartitionMap full = modified;
  std::vector<int> parts;
  for (int p : modified.at(identity_class).parts()) parts.push_back(p + 1);
  parts.insert(parts.end(), n - need, 1);
  full.set(identity_class, Partition(std::move(parts)));
  return full;
}

ClassPartitionMap modified_type_of(const WreathContext& ctx, const WreathElement& x) {
  return to_modified(type_of(ctx, x), ctx.identity_class());
}

int degree(const WreathContext& ctx, const WreathElement& x) {
  int d = 0;
  for (const auto& c : cycles(ctx, x))
    d += static_cast<int>(c.support.size()) - 1 + (c.product_class != ctx.identity_class() ? 1 : 0);
  return d;
}

std::set<int> support(const FiniteGroup& group, const std::vector<WreathElement>& xs) {
  std::set<int> s;
  for (const auto& x : xs)
    for (int j = 0; j < x.n; ++j)
      if (x.sigma[j] != j || x.g[j] != group.identity()) s.insert(j + 1);
  return s;
}

WreathElement factor_element(const FiniteGroup& group, const ReducedFactor& f, int n) {
  WreathElement x = wreath_identity(group, n);
  if (f.kind == ReducedFactor::Kind::Insertion) {
    x.g[f.i - 1] = f.g;
  } else {
    x.g[f.j - 1] = f.g;
    x.g[f.i - 1] = group.inv(f.g);
    std::swap(x.sigma[f.i - 1], x.sigma[f.j - 1]);
  }
  return x;
}

std::vector<ReducedFactor> reduced_expression(const WreathContext& ctx, const WreathElement& x) {
  std::vector<ReducedFactor> out;
  for (const auto& c : cycles(ctx, x)) {
    const auto& s = c.support;
    for (std::size_t t = 0; t + 1 < s.size(); ++t)
      out.push_back({ReducedFactor::Kind::Transposition, s[t], s[t + 1], x.g[s[t + 1] - 1]});
    if (c.product != ctx.group->identity())
      out.push_back({ReducedFactor::Kind::Insertion, s.back(), 0, c.product});
  }
  return out;
}

namespace {

struct Slot {
  int length;
  ClassIndex cls;
};

// Cycle slots of the full type, longest first.
std::vector<std::pair<Slot, int>> slots_of(const ClassPartitionMap& full) {
  std::vector<std::pair<Slot, int>> slots;
  for (const auto& [c, p] : full.entries())
    for (auto [len, m] : p.multiplicities()) slots.push_back({{len, c}, m});
  std::sort(slots.begin(), slots.end(), [](const auto& a, const auto& b) {
    return a.first.length != b.first.length ? a.first.length > b.first.length : a.first.cls < b.first.cls;
  });
  return slots;
}

class ClassEnumerator {
 public:
  ClassEnumerator(const WreathContext& ctx, int n, const ClassPartitionMap& full,
                  const std::function<void(const WreathElement&)>& visit, EnumerateShard shard)
      : ctx_(ctx), grp_(*ctx.group), visit_(visit), shard_(shard), slots_(slots_of(full)),
        x_(wreath_identity(grp_, n)), used_(n, 0) {}

  void run() { next_cycle(0); }

 private:
  void next_cycle(int depth) {
    int start = 0;
    while (start < x_.n && used_[start]) ++start;
    if (start == x_.n) {
      visit_(x_);
      return;
    }
    for (auto& [slot, count] : slots_) {
      if (count == 0) continue;
      --count;
      cyc_.assign(1, start);
      used_[start] = 1;
      choose_positions(slot, depth);
      used_[start] = 0;
      ++count;
    }
  }

  void choose_positions(const Slot& slot, int depth) {
    if (static_cast<int>(cyc_.size()) == slot.length) {
      assign_elements(slot, depth);
      return;
    }
    for (int j = cyc_.front() + 1; j < x_.n; ++j) {
      if (used_[j]) continue;
      used_[j] = 1;
      cyc_.push_back(j);
      choose_positions(slot, depth);
      cyc_.pop_back();
      used_[j] = 0;
    }
  }

  void assign_elements(const Slot& slot, int depth) {
    const int k = slot.length;
    for (int t = 0; t < k; ++t) x_.sigma[cyc_[t]] = cyc_[(t + 1) % k];
    const auto& targets = ctx_.classes->classes[slot.cls];
    std::vector<Element> free(k - 1, 0);
    std::vector<int> cyc = cyc_;  // next_cycle reuses cyc_
    while (true) {
      // prefix = g_{i_{k-1}} ⋯ g_{i_1}
      Element prefix = grp_.identity();
      for (int t = 0; t < k - 1; ++t) {
        x_.g[cyc[t]] = free[t];
        prefix = grp_.mul(free[t], prefix);
      }
      const Element prefix_inv = grp_.inv(prefix);
      for (Element e : targets) {
        x_.g[cyc[k - 1]] = grp_.mul(e, prefix_inv);
        if (depth == 0 && (top_counter_++ % shard_.count) != static_cast<std::uint64_t>(shard_.index)) continue;
        next_cycle(depth + 1);
      }
      int t = 0;
      while (t < k - 1 && ++free[t] == grp_.order()) free[t++] = 0;
      if (t == k - 1) break;
    }
    for (int t = 0; t < k; ++t) {
      x_.sigma[cyc[t]] = cyc[t];
      x_.g[cyc[t]] = grp_.identity();
    }
    cyc_ = cyc;
  }

  const WreathContext& ctx_;
  const FiniteGroup& grp_;
  const std::function<void(const WreathElement&)>& visit_;
  EnumerateShard shard_;
  std::vector<std::pair<Slot, int>> slots_;
  WreathElement x_;
  std::vector<char> used_;
  std::vector<int> cyc_;
  std::uint64_t top_counter_ = 0;
};

}  // namespace

WreathElement canonical_representative(const WreathContext& ctx, int n,
                                       const ClassPartitionMap& modified) {
  if (realizable_threshold(modified, ctx.identity_class()) > n)
    throw Error(Errc::NotRealizable, modified.str() + " is not realizable in n = " + std::to_string(n));
  ClassPartitionMap full = to_full(modified, n, ctx.identity_class());
  WreathElement x = wreath_identity(*ctx.group, n);
  int pos = 0;
  for (auto [slot, count] : slots_of(full)) {
    for (int m = 0; m < count; ++m) {
      for (int t = 0; t < slot.length; ++t) x.sigma[pos + t] = pos + (t + 1) % slot.length;
      x.g[pos + slot.length - 1] = ctx.classes->representative(slot.cls);
      pos += slot.length;
    }
  }
  return x;
}

BigInt class_size(const WreathContext& ctx, int n, const ClassPartitionMap& modified) {
  if (realizable_threshold(modified, ctx.identity_class()) > n) return 0;
  ClassPartitionMap full = to_full(modified, n, ctx.identity_class());
  return ipow(BigInt(ctx.group->order()), n) * factorial(n) / big_Z(full, ctx.classes->zeta);
}

void enumerate_class(const WreathContext& ctx, int n, const ClassPartitionMap& modified,
                     const std::function<void(const WreathElement&)>& visit, EnumerateShard shard) {
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count)
    throw Error(Errc::Precondition, "bad shard");
  for (const auto& [c, p] : modified.entries())
    if (c >= ctx.classes->size()) throw Error(Errc::UnknownClass, "class " + std::to_string(c) + " out of range");
  if (realizable_threshold(modified, ctx.identity_class()) > n) return;
  ClassEnumerator(ctx, n, to_full(modified, n, ctx.identity_class()), visit, shard).run();
}

const std::vector<std::uint32_t>& TypeSignature::compute(const WreathContext& ctx, const WreathElement& x) {
  sig_.clear();
  seen_.assign(x.n, 0);
  const FiniteGroup& grp = *ctx.group;
  const ClassIndex c0 = ctx.identity_class();
  for (int i = 0; i < x.n; ++i) {
    if (seen_[i]) continue;
    Element p = grp.identity();
    std::uint32_t len = 0;
    for (int j = i; !seen_[j]; j = x.sigma[j]) {
      seen_[j] = 1;
      p = grp.mul(x.g[j], p);
      ++len;
    }
    const ClassIndex c = ctx.classes->class_of[p];
    if (len == 1 && c == c0) continue;
    sig_.push_back((static_cast<std::uint32_t>(c) << 16) | len);
  }
  std::sort(sig_.begin(), sig_.end());
  return sig_;
}

std::vector<std::uint32_t> TypeSignature::of(const ClassPartitionMap& modified, ClassIndex identity_class) {
  std::vector<std::uint32_t> sig;
  for (const auto& [c, p] : modified.entries())
    for (int part : p.parts())
      sig.push_back((static_cast<std::uint32_t>(c) << 16) |
                    static_cast<std::uint32_t>(c == identity_class ? part + 1 : part));
  std::sort(sig.begin(), sig.end());
  return sig;
}

ClassPartitionMap TypeSignature::decode(const std::vector<std::uint32_t>& sig, ClassIndex identity_class) {
  ClassPartitionMap m;
  for (std::uint32_t code : sig) {
    const auto c = static_cast<ClassIndex>(code >> 16);
    const int len = static_cast<int>(code & 0xffff);
    m.add_part(c, c == identity_class ? len - 1 : len);
  }
  return m;
}

}  // namespace wfh
