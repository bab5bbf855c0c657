#include "gcp/group.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gcp {

AbelianGroup::AbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  if (orders_.empty()) throw std::invalid_argument("abelian group needs at least one cyclic factor");
  order_ = 1;
  exponent_ = 1;
  for (int n : orders_) {
    if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
    order_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
}

bool AbelianGroup::contains(const GroupElement& g) const {
  if (g.size() != orders_.size()) return false;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] < 0 || g[k] >= orders_[k]) return false;
  }
  return true;
}

bool AbelianGroup::is_identity(const GroupElement& g) const {
  require(g);
  for (int c : g) {
    if (c != 0) return false;
  }
  return true;
}

void AbelianGroup::require(const GroupElement& g, const char* what) const {
  if (!contains(g)) {
    throw std::invalid_argument(std::string(what) + " " + gcp::to_string(g) + " is not in group " + to_string());
  }
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  GroupElement out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = (a[k] + b[k]) % orders_[k];
  return out;
}

GroupElement AbelianGroup::negate(const GroupElement& g) const {
  require(g);
  GroupElement out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) out[k] = (orders_[k] - g[k]) % orders_[k];
  return out;
}

int AbelianGroup::index_of(const GroupElement& g) const {
  require(g);
  int index = 0;
  for (std::size_t k = 0; k < g.size(); ++k) index = index * orders_[k] + g[k];
  return index;
}

GroupElement AbelianGroup::element_at(int index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("group element index out of range");
  GroupElement out(orders_.size());
  for (std::size_t k = orders_.size(); k-- > 0;) {
    out[k] = index % orders_[k];
    index /= orders_[k];
  }
  return out;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (int k = 0; k < order_; ++k) out.push_back(element_at(k));
  return out;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < orders_.size(); ++k) out << (k ? " x " : "") << "Z" << orders_[k];
  return out.str();
}

std::string to_string(const GroupElement& g) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < g.size(); ++k) out << (k ? "," : "") << g[k];
  out << ')';
  return out.str();
}

}  // namespace gcp
