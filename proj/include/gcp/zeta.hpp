#pragma once

// Bartholdi zeta reciprocals and spanning-tree counts.

#include "gcp/bivar_poly.hpp"
#include "gcp/graph.hpp"
#include "gcp/numeric.hpp"

#include <optional>

namespace gcp {

/// Z_G(u, t)^{-1} = prefactor_base^{prefactor_exponent} * core, with
/// prefactor_base = 1 - (1-u)^2 t^2 and prefactor_exponent = ε - ν.
/// The exponent is negative for forests, so the prefactor is kept symbolic.
struct ZetaReciprocal {
  BivarPoly<BigInt> prefactor_base{Variables::u_t};
  int prefactor_exponent = 0;
  BivarPoly<BigInt> core{Variables::u_t};
};

/// 1 - (1-u)^2 t^2.
BivarPoly<BigInt> bartholdi_prefactor_base();

/// core = det[I - A t + (1-u)(D - (1-u)I) t^2], by interpolation on a
/// (2ν+1) x (2ν+1) grid. Isolated vertices are taken literally: each
/// contributes a factor 1 - (1-u)^2 t^2 to the core.
ZetaReciprocal bartholdi_direct(const Graph& g);

/// core = t^ν F_G(1/t - (1-u)^2 t, (1-u) t). Throws std::logic_error if a
/// negative power of t survives the substitution.
ZetaReciprocal bartholdi_from_gcp(const Graph& g, const BivarPoly<BigInt>& gcp);

/// prefactor_base^{exponent} * core as a polynomial, when it is one
/// (exact division for negative exponents); empty otherwise.
std::optional<BivarPoly<BigInt>> reduced_reciprocal(const ZetaReciprocal& z);

/// Value of Z^{-1} at a rational point; throws std::domain_error when the
/// prefactor vanishes there and the exponent is negative.
Rational evaluate_reciprocal(const ZetaReciprocal& z, const Rational& u, const Rational& t);

/// Ihara specialisation det[I - A t + (D - I) t^2], written in (u, t) with
/// no u terms.
BivarPoly<BigInt> ihara_determinant(const Graph& g);

/// (1 / 2ε) ∂F/∂μ at (0, 1). Throws std::logic_error if the derivative is
/// not divisible by 2ε. With no edges: 1 for a single vertex, 0 otherwise.
/// Disconnected graphs give 0.
BigInt complexity_from_gcp(const BivarPoly<BigInt>& gcp, long edge_count, int vertex_count);
BigInt complexity_gcp(const Graph& g);

/// Any cofactor of the Laplacian D - A (the (0,0) one), by Bareiss.
BigInt complexity_kirchhoff(const Graph& g);

struct NorthshieldResult {
  BigInt value;     // f'_G(1), f_G(u) = det[I - uA + u^2 (D - I)]
  BigInt expected;  // 2(ε - ν) κ(G)
  bool matches;
};

/// Requires a connected graph (std::invalid_argument otherwise).
NorthshieldResult northshield_check(const Graph& g);

}  // namespace gcp
