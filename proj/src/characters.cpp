#include "gcp/characters.hpp"

#include <stdexcept>

namespace gcp {

std::vector<Character> all_characters(const AbelianGroup& group) {
  std::vector<Character> out;
  out.reserve(group.order());
  for (const auto& index : group.elements()) out.push_back({group, index});
  return out;
}

Cyclotomic char_value(const Character& chi, const GroupElement& g) {
  const auto& group = chi.group;
  group.require(g);
  const long n = group.exponent();
  long exponent = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const long order = group.cyclic_orders()[k];
    exponent = (exponent + static_cast<long>(chi.index[k]) * g[k] % order * (n / order)) % n;
  }
  return Cyclotomic::root_of_unity(static_cast<int>(n), exponent);
}

Cyclotomic char_sum(const Character& chi, std::span<const GroupElement> set) {
  Cyclotomic sum(0);
  for (const auto& s : set) sum += char_value(chi, s);
  return sum;
}

Character conjugate(const Character& chi) { return {chi.group, chi.group.negate(chi.index)}; }

Mat<Cyclotomic> weighted_arc_matrix(const Graph& g, const AbelianVoltage& phi, const Character& chi) {
  if (!(phi.base() == g)) throw std::invalid_argument("voltage assignment belongs to a different base graph");
  if (!(phi.group() == chi.group)) throw std::invalid_argument("character group does not match voltage group");
  Mat<Cyclotomic> out = Mat<Cyclotomic>::Constant(g.vertex_count(), g.vertex_count(), Cyclotomic(0));
  for (const auto& arc : g.arcs()) out(arc.tail, arc.head) = char_value(chi, phi(arc.tail, arc.head));
  return out;
}

}  // namespace gcp
