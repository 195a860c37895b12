#pragma once

#include <string>

#include "mldelab/qseries.hpp"

namespace mldelab {

/// Sum of the m-th powers of the divisors of n. DomainError for n < 1.
Integer divisor_sigma(unsigned m, long n);

/// Normalized Eisenstein series of weight k in {2, 4, 6}:
/// E2 = 1 - 24 sum sigma1(n) q^n, E4 = 1 + 240 sum sigma3(n) q^n,
/// E6 = 1 - 504 sum sigma5(n) q^n. Known strictly below q^terms.
QSeries eisenstein(int k, long terms);

/// q^(1/24) prod (1 - q^n), by the Euler product.
QSeries dedekind_eta(long terms);

/// eta^n for any integer n (negative n through inversion of the product),
/// computed by repeated squaring of the truncated product.
QSeries eta_power(long n, long terms);

/// Jacobi theta constants,
///   theta2 = sum q^((n+1/2)^2/2), theta3 = sum q^(n^2/2),
///   theta0 = sum (-1)^n q^(n^2/2),
/// which in {2, 3, 0}; scale 1 evaluates at q, scale 2 at q^2.
QSeries jacobi_theta(int which, int scale, long terms);

/// Auxiliary series of the c=4 study: I3, Delta3 = eta(q^3)^3/eta(q),
/// Delta2 = eta(q^2)^8/eta(q)^4, Delta2A = eta^8 eta(q^2)^8,
/// Delta3A = eta^6 eta(q^3)^6, H2 = 2 E2(q^2) - E2(q), and the
/// Rogers-Ramanujan products psi1, psi2 on ramification 60.
QSeries aux_series(const std::string& name, long terms);

} // namespace mldelab
