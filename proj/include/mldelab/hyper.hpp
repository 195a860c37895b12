#pragma once

#include <array>
#include <utility>
#include <vector>

#include "mldelab/qseries.hpp"

namespace mldelab {

/// Rising factorial (x)_r = x (x+1) ... (x+r-1), (x)_0 = 1.
Rational pochhammer(const Rational& x, long r);

struct HyperParams {
    std::array<Rational, 3> upper;
    std::array<Rational, 2> lower;
};

/// Coefficients of 3F2(a,b,c; d,e; z) = sum (a)_r (b)_r (c)_r / ((d)_r (e)_r) z^r / r!.
/// PoleInLowerParameterError when a lower parameter is a non-positive integer.
std::vector<Rational> f32_series(const HyperParams& p, long terms);

/// j = E4^3 / eta^24 = q^-1 + 744 + 196884 q + ...
QSeries j_function(long terms);
/// K = 1728/j = 1728 q (1 - 744 q + ...).
QSeries kappa(long terms);

/// f_i / 1728^(r_i) where f_i = K^(r_i) 3F2(r_i, r_i+1/3, r_i+2/3;
/// r_i-r_j+1, r_i-r_k+1; K), assembled by composing the z-series with K(q).
/// The 1728^(r_i) normalization keeps everything rational.
QSeries hyper_solution(const std::array<Rational, 3>& r, int i, long terms);

/// Residuals of the hypergeometric representations of x and y:
/// x - j^(1/6) 3F2(-1/6,1/6,1/2; 1/2,1/2; 1728/j) and
/// y - j^(-1/3) 3F2(1/3,2/3,1; 3/2,1; 1728/j). Both zero to truncation.
std::pair<QSeries, QSeries> xy_hypergeometric_check(long terms);

} // namespace mldelab
