#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wreathfh/group.hpp"

namespace wfh {

enum class AdeFamily { A, D, E6, E7, E8 };

struct DynkinVertex {
  std::string label;  // word in the generators, e.g. "A^2", "BA", "Z"
  Element element;
  ClassIndex class_index;
};

/// A finite subgroup of SL2(C) with its standard generators and the dual
/// McKay labelling of its Dynkin diagram. Groups from `file:` or
/// `symmetric:` specs reuse this struct with an empty diagram and
/// `is_ade == false`.
struct AdeGroup {
  std::string name;
  FiniteGroup group;
  ClassTable classes;
  bool is_ade = true;
  AdeFamily family = AdeFamily::A;
  int rank_param = 0;  // n for A_{n-1} (cyclic Z_n) and for D_{n+2} (BD_{4n})
  std::map<std::string, Element> generators;
  std::vector<DynkinVertex> dynkin;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> tau;  // vertex permutation
};

struct Table2Row {
  int num_classes;
  int num_complex;
  int num_real;
  int tau_order;
  friend bool operator==(const Table2Row&, const Table2Row&) = default;
};

AdeGroup make_cyclic(int n);
/// order = 4n with n >= 3; throws Error{BadOrder} otherwise.
AdeGroup make_binary_dihedral(int order);

enum class Polyhedral { BT, BO, BI };
AdeGroup make_binary_polyhedral(Polyhedral kind);

Table2Row table2_row(const AdeGroup& g);
std::vector<ClassIndex> tau_fixed_classes(const AdeGroup& g);
/// Order of the permutation g.tau.
int tau_order(const AdeGroup& g);

/// Cross-checks that the diagram labels biject onto the nontrivial classes and
/// that tau preserves adjacency. Returns a list of problems (empty when valid).
std::vector<std::string> validate_dynkin(const AdeGroup& g);

/// S_n as a Cayley table (n <= 6), elements in lexicographic order of their
/// one-line notation. Not an ADE group; handy for nonabelian tests.
AdeGroup make_symmetric(int n);

/// Wraps an arbitrary group (e.g. loaded from a Cayley table).
AdeGroup make_plain(std::string name, FiniteGroup group);

/// Group-spec grammar: trivial, cyclic:<n>, bindihedral:<order> (alias
/// bd:<order>), bt, bo, bi, symmetric:<n>, file:<path>.
AdeGroup parse_group_spec(const std::string& spec);

}  // namespace wfh
