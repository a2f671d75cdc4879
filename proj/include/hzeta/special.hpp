// SPDX-License-Identifier: Apache-2.0
//
// Gamma-family functions, Bernoulli numbers and principal-branch powers
// over complex arguments, all in double precision.

#ifndef HZETA_SPECIAL_HPP
#define HZETA_SPECIAL_HPP

#include "hzeta/jet.hpp"
#include "hzeta/types.hpp"

namespace hzeta {

/// Largest index stored in the Bernoulli table.
inline constexpr int kMaxBernoulli = 60;

/// B_k for even 0 <= k <= kMaxBernoulli (B_1 = -1/2 is also accepted).
/// The table is built once from the defining recurrence in exact rational
/// arithmetic; concurrent readers are safe after first use.
double bernoulli_number(int k);

/// Log with arg in (-pi, pi]; a negative real with -0.0 imaginary part maps
/// to arg = +pi. Throws DomainError for zero.
Complex principal_log(Complex z);

/// Gamma function. Lanczos approximation for Re z >= 1/2, reflection below.
/// Throws DomainError at z = 0, -1, -2, ...
Complex gamma_function(Complex z);

/// psi^(m)(z), the m-th polygamma function (m = 0 is digamma).
Complex polygamma(int m, Complex z);

/// Jet of Gamma at z (in the variable z) up to `order`; coefficient k is
/// Gamma^(k)(z) / k!.
SJet gamma_jet(Complex z, std::size_t order);

/// base^exponent = exp(exponent * Log base) with the principal logarithm.
/// Throws DomainError for base == 0.
SJet pow_principal(Complex base, const SJet& exponent);
Complex pow_principal(Complex base, Complex exponent);

/// Upper incomplete gamma Gamma(a, z) = int_z^inf t^(a-1) e^(-t) dt on the
/// principal branch. Power series below |z| = max(8, |a| + 2), Legendre
/// continued fraction above.
Complex upper_incomplete_gamma(Complex a, Complex z);

/// Beta(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
Complex beta_fn(Complex a, Complex b);

/// True when z is within `tol` of one of 0, -1, -2, ...
bool near_nonpositive_integer(Complex z, double tol = 1e-14);

}  // namespace hzeta

#endif  // HZETA_SPECIAL_HPP
