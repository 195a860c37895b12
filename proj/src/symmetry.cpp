#include "mldelab/symmetry.hpp"

#include <algorithm>

#include "mldelab/errors.hpp"

namespace mldelab {

CHPair sym_lambda(const CHPair& p) {
    return CHPair{p.c - 24 * p.h, p.c / 8 - 2 * p.h + Rational(1, 2)};
}

CHPair sym_mu(const CHPair& p) {
    return CHPair{p.c - 24 * p.h, -p.h};
}

WeightTable weight_table(const CHPair& p) {
    const Rational& c = p.c;
    const Rational& h = p.h;
    WeightTable t;
    t.rows[0] = {c, {Rational(0), h, c / 8 + Rational(1, 2) - h}};
    t.rows[1] = {c - 24 * h, {-h, Rational(0), c / 8 + Rational(1, 2) - 2 * h}};
    t.rows[2] = {24 * h - 2 * c - 12,
                 {h - c / 8 - Rational(1, 2), 2 * h - c / 8 - Rational(1, 2), Rational(0)}};
    return t;
}

Rational second_coeff_m(const CHPair& p) {
    const Rational& c = p.c;
    const Rational& h = p.h;
    Rational den = (h - 1) * (c - 8 * h - 4);
    if (den == 0)
        throw DegenerateDenominatorError("(h-1)(c-8h-4) = 0 at c=" + rat_str(c) +
                                         ", h=" + rat_str(h));
    Rational num = -c * c * c + 31 * c * c * h - 7 * c * c - 248 * c * h * h + 124 * c * h - 4 * c;
    return num / den;
}

std::vector<Rational> h_from_cm(const Rational& c, const Rational& m) {
    Rational pivot = m - 31 * c;
    if (pivot == 0)
        throw DegenerateError("m = 31c: the quadratic for h degenerates (every h solves it "
                              "when c is 0, 8 or 16)");
    Rational D = pivot * (m * (c - 12) * (c - 12) + c * (c * c - 24 * c - 368));
    auto sq = exact_sqrt(D);
    if (!sq)
        throw NotRationalSquareError("discriminant " + rat_str(D) + " is not a rational square");
    Rational h1 = (c + 4 + *sq / pivot) / 16;
    Rational h2 = (c + 4 - *sq / pivot) / 16;
    if (h1 == h2) return {h1};
    if (h1 > h2) std::swap(h1, h2);
    return {h1, h2};
}

} // namespace mldelab
