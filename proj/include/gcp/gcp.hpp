#pragma once

// The generalized characteristic polynomial F_G(λ, μ) = det(λI - (A - μD)),
// computed directly from the graph or as a product of small
// character-weighted determinants for bundles with abelian Cayley fibers.

#include "gcp/bivar_poly.hpp"
#include "gcp/characters.hpp"
#include "gcp/determinant.hpp"
#include "gcp/graph.hpp"

#include <vector>

namespace gcp {

/// λI - A + μD as a pencil over Z.
Pencil<BigInt> gcp_pencil(const Graph& g);

/// F_G(λ, μ) by evaluation and interpolation of det(λI - A + μD).
BivarPoly<BigInt> gcp_direct(const Graph& g);

/// λ is replaced by λ + mu·μ + constant before the determinant is taken.
struct LambdaShift {
  Cyclotomic constant{0};
  BigInt mu{0};
};

/// det((λ + shift)I - (W_chi - μD)) over Q(zeta_N), W_chi the
/// character-weighted arc matrix of phi.
BivarPoly<Cyclotomic> gcp_weighted(const Graph& g, const AbelianVoltage& phi, const Character& chi,
                                   const LambdaShift& shift = {});

/// F of a bundle as an ordered product of one factor per character.
struct FactoredGcp {
  std::vector<GroupElement> characters;  // index of the character behind each factor
  std::vector<BivarPoly<Cyclotomic>> factors;
  BivarPoly<BigInt> product;
};

/// Product of the factors; throws std::domain_error if the product has a
/// coefficient outside Z.
BivarPoly<BigInt> multiply_factors(const std::vector<BivarPoly<Cyclotomic>>& factors);

/// F of G x^phi Cay(A, S): factor chi is the weighted determinant with
/// λ -> λ + |S|μ - chi(S).
FactoredGcp gcp_bundle_factored(const Graph& g, const CayleyFiber& fiber, const AbelianVoltage& phi);

/// F of the |A|-fold covering G^phi (S empty).
FactoredGcp gcp_covering(const Graph& g, const AbelianVoltage& phi);

/// F of G x^phi K_n with K_n = Cay(A, A \ {id}), n = |A| >= 2.
FactoredGcp gcp_times_Kn(const Graph& g, const AbelianVoltage& phi);

/// F of the Cartesian product G x Cay(A, S) by substituting
/// λ -> λ + |S|μ - chi(S) into F_G, one factor per character.
FactoredGcp gcp_cartesian(const Graph& g, const CayleyFiber& fiber);

}  // namespace gcp
