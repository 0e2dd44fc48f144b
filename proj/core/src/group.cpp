#include "wreathfh/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "wreathfh/error.hpp"

namespace wfh {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::BadTable: return "BadTable";
    case Errc::BadOrder: return "BadOrder";
    case Errc::ClosureOverflow: return "ClosureOverflow";
    case Errc::RelationFailure: return "RelationFailure";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::NotContained: return "NotContained";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::TooShort: return "TooShort";
    case Errc::RangeTooLarge: return "RangeTooLarge";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::TooSmall: return "TooSmall";
    case Errc::BadElement: return "BadElement";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BadCycle: return "BadCycle";
    case Errc::NonIntegralResult: return "NonIntegralResult";
    case Errc::ExponentResidue: return "ExponentResidue";
    case Errc::Precondition: return "Precondition";
    case Errc::NotIntegerValued: return "NotIntegerValued";
    case Errc::InsufficientPoints: return "InsufficientPoints";
    case Errc::Mismatch: return "Mismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Element FiniteGroup::power(Element a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = identity_;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) rows[i][j] = mul(i, j);
  return rows;
}

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup build_group(const std::vector<std::vector<int>>& cayley,
                        std::vector<std::string> labels) {
  const int n = static_cast<int>(cayley.size());
  if (n == 0) throw Error(Errc::BadTable, "empty table");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(Errc::BadTable, "label count does not match order");

  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cayley[i].size()) != n)
      throw Error(Errc::BadTable, "row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      int v = cayley[i][j];
      if (v < 0 || v >= n)
        throw Error(Errc::BadTable, "entry (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ") out of range");
      g.table_[static_cast<std::size_t>(i) * n + j] = v;
    }
  }

  auto assoc_fails = [&](int a, int b, int c) {
    return g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c));
  };
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (assoc_fails(a, b, c))
            throw Error(Errc::NotAssociative, "witness triple " + triple(a, b, c));
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 100000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (assoc_fails(a, b, c))
        throw Error(Errc::NotAssociative, "witness triple " + triple(a, b, c));
    }
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(Errc::NoIdentity, "no two-sided identity in table");
  g.identity_ = identity;

  g.inv_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.mul(x, y) == identity && g.mul(y, x) == identity) {
        g.inv_[x] = y;
        break;
      }
    }
    if (g.inv_[x] < 0)
      throw Error(Errc::NotInvertible, "element " + std::to_string(x) + " has no inverse");
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);
  return g;
}

ClassTable conjugacy_classes(const FiniteGroup& group) {
  const int n = group.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Element>> orbits;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Element> orbit;
    for (Element y = 0; y < n; ++y) {
      Element conj = group.mul(group.mul(y, x), group.inv(y));
      if (!seen[conj]) {
        seen[conj] = 1;
        orbit.push_back(conj);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  const Element e = group.identity();
  std::sort(orbits.begin(), orbits.end(), [e](const auto& a, const auto& b) {
    bool ia = a.front() == e && a.size() == 1;
    bool ib = b.front() == e && b.size() == 1;
    if (ia != ib) return ia;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });

  ClassTable t;
  t.classes = std::move(orbits);
  t.class_of.assign(n, -1);
  for (int c = 0; c < t.size(); ++c)
    for (Element x : t.classes[c]) t.class_of[x] = c;
  t.zeta.resize(t.size());
  t.inv_class.resize(t.size());
  for (int c = 0; c < t.size(); ++c) {
    t.zeta[c] = n / static_cast<std::int64_t>(t.classes[c].size());
    t.inv_class[c] = t.class_of[group.inv(t.classes[c].front())];
  }
  t.identity_class = 0;
  return t;
}

RealComplexSplit real_complex_split(const ClassTable& classes) {
  RealComplexSplit s;
  for (ClassIndex c = 0; c < classes.size(); ++c) {
    ClassIndex cbar = classes.inv_class[c];
    if (c == classes.identity_class) continue;
    if (cbar == c) {
      s.real_classes.push_back(c);
    } else {
      s.complex_classes.push_back(c);
      if (c < cbar) s.complex_pairs.emplace_back(c, cbar);
    }
  }
  return s;
}

}  // namespace wfh
