#pragma once

#include "gcp/cyclotomic.hpp"
#include "gcp/graph.hpp"
#include "gcp/group.hpp"
#include "gcp/numeric.hpp"

#include <span>
#include <vector>

namespace gcp {

/// Character chi_a of Z_{n1} x ... x Z_{nk}:
///   chi_a(g) = zeta_N^{sum_j a_j g_j N / n_j},  N = lcm(n_j).
/// All values of all characters of one group live in Q(zeta_N).
struct Character {
  AbelianGroup group;
  GroupElement index;

  bool is_principal() const { return group.is_identity(index); }
};

/// Every character, principal first, then lexicographic by index.
std::vector<Character> all_characters(const AbelianGroup& group);

Cyclotomic char_value(const Character& chi, const GroupElement& g);

/// chi(S) = sum of chi(s) over s in S.
Cyclotomic char_sum(const Character& chi, std::span<const GroupElement> set);

/// Character of the conjugate index -a; its values are the conjugates of chi's.
Character conjugate(const Character& chi);

/// Sum over gamma of chi(gamma) * A(G_(phi, gamma)): entry (i, j) is chi(phi(i -> j)).
Mat<Cyclotomic> weighted_arc_matrix(const Graph& g, const AbelianVoltage& phi, const Character& chi);

}  // namespace gcp
