#include "gcp/zeta.hpp"

#include "gcp/determinant.hpp"
#include "gcp/gcp.hpp"

#include <stdexcept>

namespace gcp {

namespace {

using UT = BivarPoly<BigInt>;

UT u_poly() { return UT::x(Variables::u_t); }
UT t_poly() { return UT::y(Variables::u_t); }
UT one() { return UT::constant(1, Variables::u_t); }

}  // namespace

BivarPoly<BigInt> bartholdi_prefactor_base() {
  const UT one_minus_u = one() - u_poly();
  return one() - one_minus_u * one_minus_u * t_poly() * t_poly();
}

ZetaReciprocal bartholdi_direct(const Graph& g) {
  const int n = g.vertex_count();
  const IntMatrix a = adjacency_matrix(g);
  const auto degrees = g.degrees();
  auto evaluate_at = [&](long u, long t) {
    const BigInt s = 1 - u;  // 1 - u
    const BigInt tt = BigInt(t) * t;
    Mat<BigInt> m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          m(i, j) = 1 + s * (degrees[i] - s) * tt;
        } else {
          m(i, j) = -a(i, j) * BigInt(t);
        }
      }
    }
    return m;
  };
  ZetaReciprocal out;
  out.prefactor_base = bartholdi_prefactor_base();
  out.prefactor_exponent = g.edge_count() - n;
  out.core = det_interpolate<BigInt>(evaluate_at, 2 * n, 2 * n, Variables::u_t);
  return out;
}

ZetaReciprocal bartholdi_from_gcp(const Graph& g, const BivarPoly<BigInt>& gcp) {
  const int n = g.vertex_count();
  // F(X/t, Y) t^n with X = 1 - (1-u)^2 t^2, Y = (1-u) t: the term
  // c λ^i μ^j becomes c X^i Y^j t^{n-i}.
  const UT x = bartholdi_prefactor_base();
  const UT y = (one() - u_poly()) * t_poly();
  const int dx = std::max(gcp.degree_x(), 0);
  const int dy = std::max(gcp.degree_y(), 0);
  std::vector<UT> xs{one()};
  std::vector<UT> ys{one()};
  for (int k = 1; k <= dx; ++k) xs.push_back(xs.back() * x);
  for (int k = 1; k <= dy; ++k) ys.push_back(ys.back() * y);
  UT core(Variables::u_t);
  for (const auto& [e, c] : gcp.terms()) {
    const int t_power = n - e.first;
    if (t_power < 0) {
      throw std::logic_error("negative power of t after substitution (λ-degree " + std::to_string(e.first) +
                             " exceeds vertex count " + std::to_string(n) + ")");
    }
    core += xs[e.first] * ys[e.second] * UT::monomial(c, 0, t_power, Variables::u_t);
  }
  ZetaReciprocal out;
  out.prefactor_base = x;
  out.prefactor_exponent = g.edge_count() - n;
  out.core = std::move(core);
  return out;
}

std::optional<BivarPoly<BigInt>> reduced_reciprocal(const ZetaReciprocal& z) {
  if (z.prefactor_exponent >= 0) return pow(z.prefactor_base, z.prefactor_exponent) * z.core;
  return divide_exact(z.core, pow(z.prefactor_base, -z.prefactor_exponent));
}

Rational evaluate_reciprocal(const ZetaReciprocal& z, const Rational& u, const Rational& t) {
  const Rational base = evaluate(z.prefactor_base, u, t);
  const Rational core = evaluate(z.core, u, t);
  if (z.prefactor_exponent < 0 && sgn(base) == 0) {
    throw std::domain_error("zeta prefactor vanishes at the requested point");
  }
  Rational factor = 1;
  const int k = z.prefactor_exponent < 0 ? -z.prefactor_exponent : z.prefactor_exponent;
  for (int i = 0; i < k; ++i) factor *= base;
  return z.prefactor_exponent < 0 ? Rational(core / factor) : Rational(core * factor);
}

BivarPoly<BigInt> ihara_determinant(const Graph& g) {
  const int n = g.vertex_count();
  const IntMatrix a = adjacency_matrix(g);
  const auto degrees = g.degrees();
  auto evaluate_at = [&](long, long t) {
    Mat<BigInt> m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m(i, j) = i == j ? BigInt(1 + BigInt(degrees[i] - 1) * t * t) : BigInt(-a(i, j) * BigInt(t));
      }
    }
    return m;
  };
  return det_interpolate<BigInt>(evaluate_at, 0, 2 * n, Variables::u_t);
}

BigInt complexity_from_gcp(const BivarPoly<BigInt>& gcp, long edge_count, int vertex_count) {
  if (edge_count == 0) return vertex_count == 1 ? 1 : 0;
  const Rational derivative = evaluate(partial_mu(gcp), Rational(0), Rational(1));
  const BigInt value = to_integer(derivative);
  const BigInt divisor = 2 * BigInt(edge_count);
  if (!mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t())) {
    throw std::logic_error("dF/dmu at (0,1) = " + value.get_str() + " is not divisible by 2*edges = " +
                           divisor.get_str());
  }
  return value / divisor;
}

BigInt complexity_gcp(const Graph& g) { return complexity_from_gcp(gcp_direct(g), g.edge_count(), g.vertex_count()); }

BigInt complexity_kirchhoff(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return 1;
  const IntMatrix laplacian = degree_matrix(g) - adjacency_matrix(g);
  Mat<BigInt> minor(n - 1, n - 1);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) minor(i - 1, j - 1) = laplacian(i, j);
  }
  return bareiss_determinant(std::move(minor));
}

NorthshieldResult northshield_check(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("Northshield identity needs a connected graph");
  const auto f = ihara_determinant(g);
  NorthshieldResult out;
  out.value = to_integer(evaluate(partial_y(f), Rational(0), Rational(1)));
  out.expected = 2 * BigInt(g.edge_count() - g.vertex_count()) * complexity_kirchhoff(g);
  out.matches = out.value == out.expected;
  return out;
}

}  // namespace gcp
