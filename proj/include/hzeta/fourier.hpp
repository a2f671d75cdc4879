// SPDX-License-Identifier: Apache-2.0
//
// Closed-form Fourier coefficients and Parseval sums for five expansions on
// the unit interval:
//
//   ZETA1_IN_ALPHA          zeta(s, alpha + 1)          0 < Re s < 1
//   HURWITZ_IN_ALPHA        zeta(s, alpha)              Re s < 1
//   HURWITZ_DERIV_IN_ALPHA  d^r/ds^r zeta(s, alpha)     Re s < 1
//   LERCH_IN_LAMBDA         phi(lambda, alpha, s)       Re s > 0
//   LERCH_IN_ALPHA          phi(lambda, alpha, s)       Re s < 1
//
// Coefficients are c_n = int_0^1 f(x) e^(-2 pi i n x) dx except for
// LERCH_IN_ALPHA, which expands in e^(-2 pi i (n + lambda) alpha).
// Parseval identities need the stricter strip (Re s < 1/2 for the alpha
// expansions, Re s > 1/2 in lambda).

#ifndef HZETA_FOURIER_HPP
#define HZETA_FOURIER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "hzeta/types.hpp"

namespace hzeta {

enum class SeriesFamily {
  zeta1_in_alpha,
  hurwitz_in_alpha,
  hurwitz_deriv_in_alpha,
  lerch_in_lambda,
  lerch_in_alpha,
};

/// "ZETA1_IN_ALPHA", ...
const char* family_tag(SeriesFamily family);

/// Accepts the tags (any case) and the short names zeta1, hurwitz,
/// hurwitz_deriv, lerch_lambda, lerch_alpha.
std::optional<SeriesFamily> parse_family(std::string_view name);

/// Human-readable strip, e.g. "0 < Re s < 1".
std::string coefficient_strip(SeriesFamily family);
std::string parseval_strip(SeriesFamily family);

/// Throw DomainError naming the strip when s is outside it.
void require_coefficient_region(SeriesFamily family, Complex s);
void require_parseval_region(SeriesFamily family, Complex s);

/// Parameters of one member of a family. Unused fields are ignored.
struct FamilyPoint {
  Complex s;
  int r = 0;            // HURWITZ_DERIV
  double alpha = 1.0;   // LERCH_IN_LAMBDA
  double lambda = 0.5;  // LERCH_IN_ALPHA
};

struct FourierCoefficient {
  int index = 0;
  Complex value;
};

/// a_0 = 1/(s-1); a_n = (2 pi i n)^(s-1) Gamma(1-s, 2 pi i n) for n != 0.
Complex coeff_zeta1(Complex s, int n, const EvalParams& params = {});

struct LeibnizRoutes {
  Complex leibniz;  // (2 pi i n)^(s-1) sum_l (-1)^(r-l) C(r,l) Gamma^(r-l)(1-s) log^l(2 pi i n)
  Complex jet;      // r! [e^r] Gamma(1-s-e) (2 pi i n)^(s+e-1)
};

/// Both evaluations of the r-th s-derivative coefficient.
LeibnizRoutes coeff_hurwitz_deriv_routes(Complex s, int r, int n);

/// Coefficient of e^(2 pi i n alpha) in zeta^(r)(s, alpha); 0 for n = 0.
/// For real s the n < 0 value is the conjugate of the n > 0 value.
/// Throws NumericError if the two routes above disagree.
Complex coeff_hurwitz_deriv(Complex s, int r, int n, const EvalParams& params = {});

/// zeta(s, a/q) = 2 (2 pi q)^(s-1) Gamma(1-s) sum_{j=1..q} sin(pi s/2 + 2 pi j a/q) zeta(1-s, j/q),
/// 1 <= a <= q. s = 0 is taken as the limit.
Complex finite_fourier_rational(Complex s, int a, int q, const EvalParams& params = {});

struct KummerPair {
  double cos_coeff;
  double sin_coeff;
};

/// log(Gamma(x)/sqrt(2 pi)) = sum_n cos_n cos(2 pi n x) + sin_n sin(2 pi n x):
/// cos_n = 1/(2n), sin_n = (log 2 pi n + gamma)/(pi n).
KummerPair kummer_coeff(int n);

/// int_0^1 log^2(Gamma(x)/sqrt(2 pi)) dx = 1/2 sum_n (cos_n^2 + sin_n^2), summed
/// in closed form through zeta(2), zeta'(2), zeta''(2).
double kummer_parseval(const EvalParams& params = {});

/// (n + alpha)^-s for n >= 0, 0 for n < 0.
Complex coeff_lerch_lambda(double alpha, Complex s, int n);

/// int_0^1 phi(lambda, x, s) e^(2 pi i (n + lambda) x) dx = Gamma(1-s) (-2 pi i (n + lambda))^(s-1).
Complex coeff_lerch_alpha(double lambda, Complex s, int n, const EvalParams& params = {});

/// Dispatch on family (HURWITZ_IN_ALPHA ignores point.r).
Complex family_coefficient(SeriesFamily family, const FamilyPoint& point, int n,
                           const EvalParams& params = {});

struct ParsevalValue {
  double value = 0.0;
  double error_budget = 0.0;  // truncation estimate; 0 for exact closed forms
  int terms = 0;              // coefficient pairs summed explicitly (ZETA1 only)
};

/// sum |c_n|^2 in closed form (or truncated with an asymptotic tail for ZETA1).
ParsevalValue parseval_rhs_detail(SeriesFamily family, const FamilyPoint& point,
                                  const EvalParams& params = {});
double parseval_rhs(SeriesFamily family, const FamilyPoint& point, const EvalParams& params = {});

/// Partial Parseval sum |c_0|^2 + sum_{1<=|n|<=N} |c_n|^2 (Bessel's inequality side).
double parseval_partial(SeriesFamily family, const FamilyPoint& point, int N,
                        const EvalParams& params = {});

struct MikolasValue {
  Complex pairing;               // sum_n c_n(s1) c_-n(s2)
  std::optional<Complex> beta;   // B(1-s1, 1-s2) zeta(1-s1-s2) when finite
};

/// int_0^1 zeta(s1, x) zeta(s2, x) dx
///   = 2 cos(pi (s1-s2)/2) (2 pi)^(s1+s2-2) Gamma(1-s1) Gamma(1-s2) zeta(2-s1-s2),
/// Re(s1 + s2) < 1.
MikolasValue mikolas_product_detail(Complex s1, Complex s2, const EvalParams& params = {});
Complex mikolas_product(Complex s1, Complex s2, const EvalParams& params = {});

}  // namespace hzeta

#endif  // HZETA_FOURIER_HPP
