#include "wreathfh/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wreathfh/error.hpp"

namespace wfh {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw Error(Errc::Precondition, "negative partition part " + std::to_string(p));
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

std::vector<int> Partition::distinct_parts() const {
  std::vector<int> d = parts_;
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

void Partition::add_part(int part) {
  if (part < 0) throw Error(Errc::Precondition, "negative partition part " + std::to_string(part));
  if (part == 0) return;
  parts_.insert(std::upper_bound(parts_.begin(), parts_.end(), part, std::greater<>()), part);
  size_ += part;
}

void Partition::remove_part(int part) {
  auto it = std::find(parts_.begin(), parts_.end(), part);
  if (it == parts_.end())
    throw Error(Errc::NotContained, "part " + std::to_string(part) + " not in " + str());
  parts_.erase(it);
  size_ -= part;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

bool contains(const Partition& a, const Partition& b) {
  auto ma = a.multiplicities();
  for (auto [part, m] : b.multiplicities()) {
    auto it = ma.find(part);
    if (it == ma.end() || it->second < m) return false;
  }
  return true;
}

Partition subtract(const Partition& a, const Partition& b) {
  if (!contains(a, b)) throw Error(Errc::NotContained, b.str() + " is not contained in " + a.str());
  Partition r = a;
  for (int p : b.parts()) r.remove_part(p);
  return r;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0, sb = 0;
  const auto n = std::max(a.length(), b.length());
  for (int i = 0; i < n; ++i) {
    sa += i < a.length() ? a.parts()[i] : 0;
    sb += i < b.length() ? b.parts()[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

BigInt z_of(const Partition& lambda) {
  BigInt z = 1;
  for (auto [i, m] : lambda.multiplicities()) z *= ipow(BigInt(i), m) * factorial(m);
  return z;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<Partition> sub_partitions(const Partition& lambda, int max_length) {
  const auto counts = lambda.multiplicities();
  std::vector<std::pair<int, int>> mult(counts.begin(), counts.end());
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == mult.size()) {
      out.emplace_back(cur);
      return;
    }
    auto [part, m] = mult[i];
    for (int take = 0; take <= m && static_cast<int>(cur.size()) + take <= max_length; ++take) {
      cur.insert(cur.end(), take, part);
      rec(i + 1);
      cur.resize(cur.size() - take);
    }
  };
  if (max_length >= 0) rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

ClassPartitionMap::ClassPartitionMap(
    std::initializer_list<std::pair<const ClassIndex, Partition>> init) {
  for (const auto& [c, p] : init) set(c, p);
}

const Partition& ClassPartitionMap::at(ClassIndex c) const {
  static const Partition empty;
  auto it = entries_.find(c);
  return it == entries_.end() ? empty : it->second;
}

void ClassPartitionMap::set(ClassIndex c, Partition p) {
  if (c < 0) throw Error(Errc::UnknownClass, "negative class index");
  if (p.empty())
    entries_.erase(c);
  else
    entries_[c] = std::move(p);
}

void ClassPartitionMap::add_part(ClassIndex c, int part) {
  if (c < 0) throw Error(Errc::UnknownClass, "negative class index");
  if (part == 0) return;
  entries_[c].add_part(part);
}

void ClassPartitionMap::remove_part(ClassIndex c, int part) {
  auto it = entries_.find(c);
  if (it == entries_.end())
    throw Error(Errc::NotContained, "class " + std::to_string(c) + " has no parts");
  it->second.remove_part(part);
  if (it->second.empty()) entries_.erase(it);
}

int ClassPartitionMap::degree() const {
  int d = 0;
  for (const auto& [c, p] : entries_) d += p.size();
  return d;
}

int ClassPartitionMap::length() const {
  int l = 0;
  for (const auto& [c, p] : entries_) l += p.length();
  return l;
}

std::string ClassPartitionMap::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [c, p] : entries_) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(c) + ":" + p.str();
  }
  return s + "}";
}

std::size_t PfnHash::operator()(const ClassPartitionMap& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& [c, p] : m.entries()) {
    mix(static_cast<std::size_t>(c) | (1ULL << 40));
    for (int part : p.parts()) mix(static_cast<std::size_t>(part));
  }
  return h;
}

ClassPartitionMap union_of(const ClassPartitionMap& a, const ClassPartitionMap& b) {
  ClassPartitionMap r = a;
  for (const auto& [c, p] : b.entries()) r.set(c, union_of(r.at(c), p));
  return r;
}

ClassPartitionMap subtract(const ClassPartitionMap& a, const ClassPartitionMap& b) {
  ClassPartitionMap r = a;
  for (const auto& [c, p] : b.entries()) r.set(c, subtract(r.at(c), p));
  return r;
}

ClassPartitionMap single_cycle(int r, ClassIndex c) {
  ClassPartitionMap m;
  m.add_part(c, r);
  return m;
}

BigInt big_Z(const ClassPartitionMap& rho, const std::vector<std::int64_t>& zeta) {
  BigInt z = 1;
  for (const auto& [c, p] : rho.entries()) {
    if (c >= static_cast<ClassIndex>(zeta.size()))
      throw Error(Errc::UnknownClass, "class " + std::to_string(c) + " out of range");
    z *= z_of(p) * ipow(BigInt(zeta[c]), p.length());
  }
  return z;
}

bool pfn_order_ge(const ClassPartitionMap& mu, const ClassPartitionMap& lambda,
                  ClassIndex identity_class) {
  if (mu.degree() != lambda.degree())
    throw Error(Errc::DegreeMismatch, "degrees " + std::to_string(mu.degree()) + " and " +
                                          std::to_string(lambda.degree()) + " differ");
  const Partition& m0 = mu.at(identity_class);
  const Partition& l0 = lambda.at(identity_class);
  if (m0 != l0 && contains(l0, m0)) return true;
  std::map<ClassIndex, int> seen;
  for (const auto& [c, p] : mu.entries()) seen[c];
  for (const auto& [c, p] : lambda.entries()) seen[c];
  for (const auto& [c, unused] : seen)
    if (!dominates(mu.at(c), lambda.at(c))) return false;
  return true;
}

std::vector<ClassPartitionMap> pfns_of_degree(int d, int num_classes) {
  std::vector<ClassPartitionMap> out;
  ClassPartitionMap cur;
  std::function<void(int, int)> rec = [&](int c, int rest) {
    if (c == num_classes - 1 || rest == 0) {
      if (rest == 0) {
        out.push_back(cur);
        return;
      }
      for (const auto& p : partitions_of(rest)) {
        cur.set(c, p);
        out.push_back(cur);
      }
      cur.set(c, Partition());
      return;
    }
    for (int take = 0; take <= rest; ++take) {
      for (const auto& p : partitions_of(take)) {
        cur.set(c, p);
        rec(c + 1, rest - take);
      }
      cur.set(c, Partition());
    }
  };
  if (d >= 0 && num_classes > 0) rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

Partition padded(const Partition& mu, int r) {
  if (r < mu.length())
    throw Error(Errc::TooShort, "r = " + std::to_string(r) + " is shorter than " + mu.str());
  std::vector<int> parts;
  for (int p : mu.parts()) parts.push_back(p + 1);
  parts.insert(parts.end(), r - mu.length(), 1);
  return Partition(std::move(parts));
}

BigInt p_count(const Partition& mu, int r, int s) {
  if (r > 10) throw Error(Errc::RangeTooLarge, "p_count supports r <= 10");
  Partition tilde = padded(mu, r);
  if (s <= 0 || s >= tilde.size()) return 0;
  std::vector<int> arr(tilde.parts().rbegin(), tilde.parts().rend());
  BigInt count = 0;
  do {
    int sum = 0;
    bool hit = false;
    for (int v : arr) {
      sum += v;
      if (sum == s) {
        hit = true;
        break;
      }
      if (sum > s) break;
    }
    if (!hit) ++count;
  } while (std::next_permutation(arr.begin(), arr.end()));
  return count;
}

BigInt q_count(const Partition& mu, int r, int s) {
  BigInt p = p_count(mu, r, s);
  BigInt w = factorial(static_cast<unsigned>(r - mu.length()));
  for (auto [i, m] : mu.multiplicities()) w *= factorial(static_cast<unsigned>(m));
  return w * p;
}

}  // namespace wfh
