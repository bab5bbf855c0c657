#include "gcp/bivar_poly.hpp"

namespace gcp {

std::optional<BivarPoly<BigInt>> divide_exact(const BivarPoly<BigInt>& num, const BivarPoly<BigInt>& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.variables() != den.variables()) throw std::invalid_argument("polynomial variable mismatch");
  const auto& [lead_exp, lead_coeff] = *den.terms().begin();
  BivarPoly<BigInt> quotient(num.variables());
  BivarPoly<BigInt> rest = num;
  while (!rest.is_zero()) {
    const auto& [exp, coeff] = *rest.terms().begin();
    if (exp.first < lead_exp.first || exp.second < lead_exp.second) return std::nullopt;
    if (!mpz_divisible_p(coeff.get_mpz_t(), lead_coeff.get_mpz_t())) return std::nullopt;
    const auto step = BivarPoly<BigInt>::monomial(BigInt(coeff / lead_coeff), exp.first - lead_exp.first,
                                                  exp.second - lead_exp.second, num.variables());
    quotient += step;
    rest -= step * den;
  }
  return quotient;
}

}  // namespace gcp
