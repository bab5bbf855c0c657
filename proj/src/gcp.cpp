#include "gcp/gcp.hpp"

#include <stdexcept>

namespace gcp {

namespace {

template <class T>
Mat<T> to_scalar(const IntMatrix& m) {
  Mat<T> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = T(m(i, j));
  }
  return out;
}

}  // namespace

Pencil<BigInt> gcp_pencil(const Graph& g) {
  const int n = g.vertex_count();
  return {to_scalar<BigInt>(-adjacency_matrix(g)), to_scalar<BigInt>(IntMatrix::Identity(n, n)),
          to_scalar<BigInt>(degree_matrix(g))};
}

BivarPoly<BigInt> gcp_direct(const Graph& g) { return det_pencil(gcp_pencil(g)); }

BivarPoly<Cyclotomic> gcp_weighted(const Graph& g, const AbelianVoltage& phi, const Character& chi,
                                   const LambdaShift& shift) {
  const int n = g.vertex_count();
  Pencil<Cyclotomic> pencil{-weighted_arc_matrix(g, phi, chi), to_scalar<Cyclotomic>(IntMatrix::Identity(n, n)),
                            to_scalar<Cyclotomic>(degree_matrix(g))};
  for (int i = 0; i < n; ++i) {
    pencil.constant(i, i) += shift.constant;
    pencil.mu(i, i) += Cyclotomic(shift.mu);
  }
  return det_pencil(pencil);
}

BivarPoly<BigInt> multiply_factors(const std::vector<BivarPoly<Cyclotomic>>& factors) {
  auto product = BivarPoly<Cyclotomic>::constant(Cyclotomic(1));
  for (const auto& f : factors) product *= f;
  return to_integer_poly(product);
}

FactoredGcp gcp_bundle_factored(const Graph& g, const CayleyFiber& fiber, const AbelianVoltage& phi) {
  if (!(fiber.group() == phi.group())) {
    throw std::invalid_argument("fiber group " + fiber.group().to_string() + " does not match voltage group " +
                                phi.group().to_string());
  }
  FactoredGcp out;
  const BigInt degree = fiber.degree();
  for (const auto& chi : all_characters(fiber.group())) {
    const Cyclotomic eigenvalue = char_sum(chi, fiber.connecting_set());
    out.characters.push_back(chi.index);
    out.factors.push_back(gcp_weighted(g, phi, chi, {-eigenvalue, degree}));
  }
  out.product = multiply_factors(out.factors);
  return out;
}

FactoredGcp gcp_covering(const Graph& g, const AbelianVoltage& phi) {
  return gcp_bundle_factored(g, CayleyFiber::edgeless(phi.group()), phi);
}

FactoredGcp gcp_times_Kn(const Graph& g, const AbelianVoltage& phi) {
  if (phi.group().order() < 2) throw std::invalid_argument("K_n fiber needs n >= 2");
  return gcp_bundle_factored(g, CayleyFiber::complete(phi.group()), phi);
}

FactoredGcp gcp_cartesian(const Graph& g, const CayleyFiber& fiber) {
  const auto base = to_cyclotomic(gcp_direct(g));
  const Cyclotomic degree(fiber.degree());
  FactoredGcp out;
  for (const auto& chi : all_characters(fiber.group())) {
    const Cyclotomic eigenvalue = char_sum(chi, fiber.connecting_set());
    out.characters.push_back(chi.index);
    out.factors.push_back(substitute_lambda(base, degree, -eigenvalue));
  }
  out.product = multiply_factors(out.factors);
  return out;
}

}  // namespace gcp
