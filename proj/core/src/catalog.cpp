#include "wreathfh/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "wreathfh/error.hpp"
#include "wreathfh/literals.hpp"
#include "wreathfh/quadfield.hpp"

namespace wfh {

namespace {

void attach_classes(AdeGroup& g) {
  g.classes = conjugacy_classes(g.group);
  for (auto& v : g.dynkin) v.class_index = g.classes.class_of[v.element];
}

DynkinVertex vertex(const FiniteGroup& grp, std::string label, Element e) {
  (void)grp;
  return {std::move(label), e, -1};
}

std::string power_label(const std::string& gen, int k) {
  return k == 1 ? gen : gen + "^" + std::to_string(k);
}

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(Errc::RelationFailure, what);
}

// Z^2 = 1, Z != 1 and Z central.
void check_central_involution(const FiniteGroup& grp, Element z) {
  require(z != grp.identity(), "Z is the identity");
  require(grp.mul(z, z) == grp.identity(), "Z^2 != 1");
  for (Element x = 0; x < grp.order(); ++x)
    require(grp.mul(x, z) == grp.mul(z, x), "Z is not central");
}

// E-type diagram: B - B^2 - Z - A^{k-1} - ... - A, with C attached to Z.
void build_e_diagram(AdeGroup& g, int k) {
  const FiniteGroup& grp = g.group;
  Element a = g.generators.at("A");
  Element b = g.generators.at("B");
  Element c = g.generators.at("C");
  Element z = g.generators.at("Z");
  g.dynkin.clear();
  g.edges.clear();
  g.dynkin.push_back(vertex(grp, "B", b));
  g.dynkin.push_back(vertex(grp, "B^2", grp.power(b, 2)));
  g.dynkin.push_back(vertex(grp, "Z", z));
  for (int j = k - 1; j >= 1; --j) g.dynkin.push_back(vertex(grp, power_label("A", j), grp.power(a, j)));
  g.dynkin.push_back(vertex(grp, "C", c));
  const int chain = static_cast<int>(g.dynkin.size()) - 1;  // vertices 0..chain-1 form the path
  for (int v = 0; v + 1 < chain; ++v) g.edges.emplace_back(v, v + 1);
  g.edges.emplace_back(2, chain);  // C hangs off Z

  g.tau.resize(g.dynkin.size());
  std::iota(g.tau.begin(), g.tau.end(), 0);
  if (k == 3) {
    // E6: swap the two arms B, B^2 <-> A, A^2.
    std::swap(g.tau[0], g.tau[4]);
    std::swap(g.tau[1], g.tau[3]);
  }
}

QuadFieldElem q(Rational a, int d) { return QuadFieldElem::rational(std::move(a), d); }
QuadFieldElem qs(Rational a, Rational b, int d) { return {std::move(a), std::move(b), d}; }

std::vector<Quaternion> closure(const std::vector<Quaternion>& gens, int expected) {
  std::set<Quaternion> seen;
  std::vector<Quaternion> order;
  Quaternion one{q(1, gens.front().w.d()), q(0, 1), q(0, 1), q(0, 1)};
  seen.insert(one);
  order.push_back(one);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& gen : gens) {
      Quaternion next = order[head] * gen;
      if (seen.insert(next).second) {
        order.push_back(next);
        if (static_cast<int>(order.size()) > 4 * expected)
          throw Error(Errc::ClosureOverflow,
                      "closure exceeded " + std::to_string(4 * expected) + " elements");
      }
    }
  }
  return order;
}

FiniteGroup table_from_quaternions(const std::vector<Quaternion>& elems) {
  std::map<Quaternion, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index.emplace(elems[i], i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> tab(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(elems[i] * elems[j]);
      if (it == index.end()) throw Error(Errc::ClosureOverflow, "closure not closed under product");
      tab[i][j] = it->second;
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(e.str());
  return build_group(tab, std::move(labels));
}

Element find_quaternion(const std::vector<Quaternion>& elems, const Quaternion& x) {
  auto it = std::find(elems.begin(), elems.end(), x);
  if (it == elems.end()) throw Error(Errc::RelationFailure, "generator missing from closure");
  return static_cast<Element>(it - elems.begin());
}

}  // namespace

AdeGroup make_cyclic(int n) {
  if (n < 1) throw Error(Errc::BadOrder, "cyclic group needs n >= 1");
  std::vector<std::vector<int>> tab(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : power_label("A", i));
    for (int j = 0; j < n; ++j) tab[i][j] = (i + j) % n;
  }
  AdeGroup g;
  g.name = "cyclic:" + std::to_string(n);
  g.group = build_group(tab, std::move(labels));
  g.family = AdeFamily::A;
  g.rank_param = n;
  g.generators["A"] = n > 1 ? 1 : 0;
  for (int i = 1; i < n; ++i) g.dynkin.push_back(vertex(g.group, power_label("A", i), i));
  for (int v = 0; v + 1 < n - 1; ++v) g.edges.emplace_back(v, v + 1);
  g.tau.resize(std::max(n - 1, 0));
  for (int v = 0; v < n - 1; ++v) g.tau[v] = n - 2 - v;  // full flip
  attach_classes(g);
  return g;
}

AdeGroup make_binary_dihedral(int order) {
  if (order % 4 != 0 || order / 4 < 3)
    throw Error(Errc::BadOrder, "binary dihedral order must be 4n with n >= 3, got " +
                                    std::to_string(order));
  const int n = order / 4;
  const int m = 2 * n;  // order of A
  // Element A^k B^e has index k + m*e.
  auto idx = [m](int k, int e) { return ((k % m) + m) % m + m * e; };
  std::vector<std::vector<int>> tab(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int e = 0; e < 2; ++e)
    for (int k = 0; k < m; ++k) {
      std::string base = k == 0 ? "" : power_label("A", k);
      labels[idx(k, e)] = e == 0 ? (k == 0 ? "1" : base) : base + "B";
    }
  for (int e1 = 0; e1 < 2; ++e1)
    for (int a = 0; a < m; ++a)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int b = 0; b < m; ++b) {
          int r;
          if (e1 == 0) {
            r = idx(a + b, e2);
          } else if (e2 == 0) {
            r = idx(a - b, 1);  // B A^b = A^{-b} B
          } else {
            r = idx(a - b + n, 0);  // B^2 = A^n
          }
          tab[idx(a, e1)][idx(b, e2)] = r;
        }

  AdeGroup g;
  g.name = "bindihedral:" + std::to_string(order);
  g.group = build_group(tab, std::move(labels));
  const FiniteGroup& grp = g.group;
  g.family = AdeFamily::D;
  g.rank_param = n;
  Element A = idx(1, 0), B = idx(0, 1), Z = idx(n, 0);
  g.generators = {{"A", A}, {"B", B}, {"Z", Z}};
  require(grp.power(A, n) == Z, "A^n != Z");
  require(grp.power(B, 2) == Z, "B^2 != Z");
  require(grp.power(grp.mul(A, B), 2) == Z, "(AB)^2 != Z");
  check_central_involution(grp, Z);

  for (int i = 1; i <= n - 1; ++i) g.dynkin.push_back(vertex(grp, power_label("A", i), grp.power(A, i)));
  g.dynkin.push_back(vertex(grp, "Z", Z));
  g.dynkin.push_back(vertex(grp, "B", B));
  g.dynkin.push_back(vertex(grp, "BA", grp.mul(B, A)));
  const int zv = n - 1, bv = n, bav = n + 1;
  for (int v = 0; v + 1 <= zv; ++v) g.edges.emplace_back(v, v + 1);
  g.edges.emplace_back(zv, bv);
  g.edges.emplace_back(zv, bav);
  g.tau.resize(g.dynkin.size());
  std::iota(g.tau.begin(), g.tau.end(), 0);
  if (n % 2 == 1) std::swap(g.tau[bv], g.tau[bav]);
  attach_classes(g);
  return g;
}

AdeGroup make_binary_polyhedral(Polyhedral kind) {
  const Rational h(1, 2);
  AdeGroup g;
  int expected = 0, k = 0, d = 1;
  std::vector<Quaternion> gens;
  // Hurwitz generators (1+i+j+k)/2 and i.
  auto hurwitz = [&](int dd) {
    return std::vector<Quaternion>{
        {q(h, dd), q(h, dd), q(h, dd), q(h, dd)},
        {q(0, dd), q(1, dd), q(0, dd), q(0, dd)},
    };
  };
  switch (kind) {
    case Polyhedral::BT:
      g.name = "bt";
      g.family = AdeFamily::E6;
      expected = 24, k = 3, d = 1;
      gens = hurwitz(1);
      break;
    case Polyhedral::BO:
      g.name = "bo";
      g.family = AdeFamily::E7;
      expected = 48, k = 4, d = 2;
      gens = hurwitz(2);
      // (1 + i)/sqrt(2)
      gens.push_back({qs(0, h, 2), qs(0, h, 2), q(0, 2), q(0, 2)});
      break;
    case Polyhedral::BI:
      g.name = "bi";
      g.family = AdeFamily::E8;
      expected = 120, k = 5, d = 5;
      gens = hurwitz(5);
      // (phi + phi^{-1} i + j)/2 with phi = (1 + sqrt5)/2
      gens.push_back({qs(Rational(1, 4), Rational(1, 4), 5), qs(Rational(-1, 4), Rational(1, 4), 5),
                      q(h, 5), q(0, 5)});
      break;
  }
  for (const auto& x : gens)
    if (x.norm() != q(1, d)) throw Error(Errc::RelationFailure, "generator is not a unit quaternion");

  std::vector<Quaternion> elems = closure(gens, expected);
  if (static_cast<int>(elems.size()) != expected)
    throw Error(Errc::RelationFailure, g.name + " closure has " + std::to_string(elems.size()) +
                                           " elements, expected " + std::to_string(expected));
  g.group = table_from_quaternions(elems);
  const FiniteGroup& grp = g.group;
  const Element Z = find_quaternion(elems, {q(-1, d), q(0, d), q(0, d), q(0, d)});
  check_central_involution(grp, Z);
  g.classes = conjugacy_classes(grp);

  if (kind == Polyhedral::BT) {
    Element A = find_quaternion(elems, {q(h, d), q(h, d), q(h, d), q(h, d)});
    Element B = find_quaternion(elems, {q(h, d), q(h, d), q(-h, d), q(h, d)});
    Element C = find_quaternion(elems, {q(0, d), q(1, d), q(0, d), q(0, d)});
    g.generators = {{"A", A}, {"B", B}, {"C", C}, {"Z", Z}};
    build_e_diagram(g, k);
    attach_classes(g);
  } else {
    // Relation search: first (A, B) in index order with A^k = B^3 = C^2 = Z,
    // ABC = Z, whose diagram labels hit distinct nontrivial classes.
    bool found = false;
    for (Element A = 0; A < grp.order() && !found; ++A) {
      if (grp.element_order(A) != 2 * k || grp.power(A, k) != Z) continue;
      for (Element B = 0; B < grp.order() && !found; ++B) {
        if (grp.power(B, 3) != Z) continue;
        Element C = grp.mul(grp.inv(grp.mul(A, B)), Z);
        if (grp.mul(C, C) != Z) continue;
        g.generators = {{"A", A}, {"B", B}, {"C", C}, {"Z", Z}};
        build_e_diagram(g, k);
        attach_classes(g);
        found = validate_dynkin(g).empty();
      }
    }
    if (!found) throw Error(Errc::RelationFailure, "no generator triple satisfies the relations for " + g.name);
  }

  Element A = g.generators.at("A"), B = g.generators.at("B"), C = g.generators.at("C");
  require(grp.power(A, k) == Z, "A^k != Z");
  require(grp.power(B, 3) == Z, "B^3 != Z");
  require(grp.power(C, 2) == Z, "C^2 != Z");
  g.rank_param = 0;
  return g;
}

int tau_order(const AdeGroup& g) {
  std::vector<int> id(g.tau.size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> p = id;
  int ord = 0;
  do {
    for (auto& v : p) v = g.tau[v];
    ++ord;
  } while (p != id);
  return ord;
}

Table2Row table2_row(const AdeGroup& g) {
  RealComplexSplit split = real_complex_split(g.classes);
  return {g.classes.size(), static_cast<int>(split.complex_classes.size()),
          static_cast<int>(split.real_classes.size()), tau_order(g)};
}

std::vector<ClassIndex> tau_fixed_classes(const AdeGroup& g) {
  std::vector<ClassIndex> fixed;
  for (int v = 0; v < static_cast<int>(g.dynkin.size()); ++v)
    if (g.tau[v] == v) fixed.push_back(g.dynkin[v].class_index);
  std::sort(fixed.begin(), fixed.end());
  return fixed;
}

std::vector<std::string> validate_dynkin(const AdeGroup& g) {
  std::vector<std::string> problems;
  if (!g.is_ade) return problems;
  std::set<ClassIndex> hit;
  for (const auto& v : g.dynkin) {
    if (v.class_index == g.classes.identity_class) problems.push_back("vertex " + v.label + " is trivial");
    if (!hit.insert(v.class_index).second) problems.push_back("vertex " + v.label + " repeats a class");
  }
  if (static_cast<int>(hit.size()) != g.classes.size() - 1 || g.dynkin.size() != hit.size())
    problems.push_back("labels do not biject onto nontrivial classes");
  std::set<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges) edges.emplace(std::min(a, b), std::max(a, b));
  for (auto [a, b] : g.edges) {
    int ta = g.tau[a], tb = g.tau[b];
    if (!edges.count({std::min(ta, tb), std::max(ta, tb)})) problems.push_back("tau breaks an edge");
  }
  return problems;
}

AdeGroup make_symmetric(int n) {
  if (n < 1 || n > 6) throw Error(Errc::BadOrder, "symmetric:<n> supports 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> tab(order, std::vector<int>(order));
  std::vector<std::string> labels;
  for (int i = 0; i < order; ++i) {
    std::string s;
    for (int v : perms[i]) s += std::to_string(v + 1);
    labels.push_back(s);
    for (int j = 0; j < order; ++j) {
      std::vector<int> comp(n);
      for (int t = 0; t < n; ++t) comp[t] = perms[i][perms[j][t]];  // i after j
      tab[i][j] = index.at(comp);
    }
  }
  return make_plain("symmetric:" + std::to_string(n), build_group(tab, std::move(labels)));
}

AdeGroup make_plain(std::string name, FiniteGroup group) {
  AdeGroup g;
  g.name = std::move(name);
  g.group = std::move(group);
  g.is_ade = false;
  g.classes = conjugacy_classes(g.group);
  return g;
}

namespace {

int parse_int(const std::string& spec, const std::string& text) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad integer in group spec '" + spec + "'");
  }
}

}  // namespace

AdeGroup parse_group_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "trivial" && arg.empty()) {
    AdeGroup g = make_cyclic(1);
    g.name = "trivial";
    return g;
  }
  if (head == "cyclic") return make_cyclic(parse_int(spec, arg));
  if (head == "bindihedral" || head == "bd") return make_binary_dihedral(parse_int(spec, arg));
  if (head == "bt" && arg.empty()) return make_binary_polyhedral(Polyhedral::BT);
  if (head == "bo" && arg.empty()) return make_binary_polyhedral(Polyhedral::BO);
  if (head == "bi" && arg.empty()) return make_binary_polyhedral(Polyhedral::BI);
  if (head == "symmetric") return make_symmetric(parse_int(spec, arg));
  if (head == "file" && !arg.empty()) return make_plain(spec, load_cayley_file(arg));
  throw Error(Errc::ParseError, "unknown group spec '" + spec + "'");
}

}  // namespace wfh
