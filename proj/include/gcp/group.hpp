#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace gcp {

/// Element of a product of cyclic groups, one residue per factor.
using GroupElement = std::vector<int>;

/// Finite abelian group Z_{n1} x ... x Z_{nk}, written additively.
///
/// Elements are enumerated lexicographically (first factor most
/// significant); index_of / element_at convert between an element and its
/// position in that order, which is also the fiber vertex numbering of a
/// Cayley graph on the group.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> cyclic_orders);

  static AbelianGroup cyclic(int n) { return AbelianGroup({n}); }

  const std::vector<int>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  int order() const { return order_; }
  /// lcm of the cyclic orders.
  int exponent() const { return exponent_; }

  GroupElement identity() const { return GroupElement(orders_.size(), 0); }
  bool contains(const GroupElement& g) const;
  bool is_identity(const GroupElement& g) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& g) const;

  int index_of(const GroupElement& g) const;
  GroupElement element_at(int index) const;
  std::vector<GroupElement> elements() const;

  /// Throws std::invalid_argument naming `what` if g is not in the group.
  void require(const GroupElement& g, const char* what = "element") const;

  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<int> orders_;
  int order_;
  int exponent_;
};

std::string to_string(const GroupElement& g);

}  // namespace gcp
