#pragma once

#include <array>
#include <vector>

#include "mldelab/rational.hpp"

namespace mldelab {

struct CHPair {
    Rational c;
    Rational h;
    friend bool operator==(const CHPair& a, const CHPair& b) { return a.c == b.c && a.h == b.h; }
};

/// lambda(c, h) = (c - 24h, c/8 - 2h + 1/2), order 3.
CHPair sym_lambda(const CHPair& p);
/// mu(c, h) = (c - 24h, -h), order 2. Together they generate S3.
CHPair sym_mu(const CHPair& p);

/// The three (central charge, conformal weights) readings of one equation:
/// (c; 0, h, c/8+1/2-h), (c-24h; -h, 0, c/8+1/2-2h),
/// (24h-2c-12; h-c/8-1/2, 2h-c/8-1/2, 0).
struct WeightTable {
    struct Row {
        Rational central_charge;
        std::array<Rational, 3> weights;
    };
    std::array<Row, 3> rows;
};
WeightTable weight_table(const CHPair& p);

/// Second coefficient of the vacuum solution,
/// m = (-c^3 + 31c^2 h - 7c^2 - 248c h^2 + 124c h - 4c) / ((h-1)(c-8h-4)).
/// DegenerateDenominatorError when (h-1)(c-8h-4) = 0.
Rational second_coeff_m(const CHPair& p);

/// Invert m -> h: h = (c + 4 +- sqrt(D)/(m-31c))/16 with
/// D = (m-31c)(m(c-12)^2 + c(c^2-24c-368)). The returned pair is mu-stable
/// (h2 = c/8 + 1/2 - h1). DegenerateError when m = 31c (at c in {0,8,16}
/// every h solves the degenerate equation); NotRationalSquareError when D
/// is not the square of a rational.
std::vector<Rational> h_from_cm(const Rational& c, const Rational& m);

} // namespace mldelab
