#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wfh {

/// Opaque element handle: an index in 0..order-1.
using Element = int;
/// Index into ClassTable::classes; class 0 is always the identity class.
using ClassIndex = int;

/// A finite group given by its full multiplication table. Immutable once
/// built; construct through build_group(), which validates the group axioms.
class FiniteGroup {
 public:
  int order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const noexcept { return inv_[a]; }
  Element power(Element a, long k) const;
  int element_order(Element a) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::vector<std::vector<int>> table() const;

 private:
  friend FiniteGroup build_group(const std::vector<std::vector<int>>&,
                                 std::vector<std::string>);

  int order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

/// Validates `cayley` (cayley[i][j] = i*j) and returns the group.
/// Throws Error{BadTable|NotAssociative|NoIdentity|NotInvertible}.
/// Associativity is checked exhaustively up to order 256 and by sampling
/// 10^5 random triples above that.
FiniteGroup build_group(const std::vector<std::vector<int>>& cayley,
                        std::vector<std::string> labels = {});

struct ClassTable {
  std::vector<std::vector<Element>> classes;  // each sorted ascending
  std::vector<ClassIndex> class_of;
  std::vector<std::int64_t> zeta;  // centralizer orders
  std::vector<ClassIndex> inv_class;
  ClassIndex identity_class = 0;

  int size() const noexcept { return static_cast<int>(classes.size()); }
  /// Smallest element index of class c.
  Element representative(ClassIndex c) const { return classes[c].front(); }
};

/// Classes ordered by (size, minimal element) with the identity class first.
ClassTable conjugacy_classes(const FiniteGroup& group);

struct RealComplexSplit {
  std::vector<ClassIndex> real_classes;
  std::vector<ClassIndex> complex_classes;
  std::vector<std::pair<ClassIndex, ClassIndex>> complex_pairs;  // (c, c̄), c < c̄
};

RealComplexSplit real_complex_split(const ClassTable& classes);

}  // namespace wfh
