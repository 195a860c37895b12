#include "mldelab/hyper.hpp"

#include "mldelab/errors.hpp"
#include "mldelab/modforms.hpp"
#include "mldelab/standard_series.hpp"

namespace mldelab {

Rational pochhammer(const Rational& x, long r) {
    if (r < 0) throw DomainError("pochhammer needs r >= 0");
    Rational acc(1);
    for (long i = 0; i < r; ++i) acc *= x + i;
    return acc;
}

std::vector<Rational> f32_series(const HyperParams& p, long terms) {
    std::vector<Rational> c(static_cast<size_t>(terms), Rational(0));
    Rational term(1);
    for (long r = 0; r < terms; ++r) {
        c[static_cast<size_t>(r)] = term;
        // a vanishing upper factor terminates the series before a lower-
        // parameter pole can bite; this is the reading under which the
        // first solution at c = 8, 16 collapses to K^(r_1)
        Rational num = (p.upper[0] + r) * (p.upper[1] + r) * (p.upper[2] + r);
        if (num == 0) break;
        Rational den = (p.lower[0] + r) * (p.lower[1] + r) * (r + 1);
        if (den == 0)
            throw PoleInLowerParameterError("lower parameter pole at term " + std::to_string(r + 1));
        term *= num / den;
    }
    return c;
}

QSeries j_function(long terms) {
    long depth = terms + 3;
    QSeries e4 = eisenstein(4, depth);
    return e4.pow(Rational(3)) * eta_power(-24, depth);
}

QSeries kappa(long terms) {
    return j_function(terms + 2).inverted().scaled(1728);
}

namespace {

// Horner composition sum c_r K^r for a series K with positive leading
// exponent. The dropped tail starts at exponent len(c) * lead(K), which
// caps the truncation of the result.
QSeries compose_with(const std::vector<Rational>& c, const QSeries& K) {
    if (c.empty()) return QSeries::zero(K.ram(), 0);
    long span = to_long(ceil_rat(K.trunc_exponent()));
    QSeries acc = QSeries::constant(c.back(), span);
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it)
        acc = acc * K + QSeries::constant(*it, span);
    Rational tail_bound = K.lead_exponent() * static_cast<long>(c.size());
    return acc.truncated(std::min(acc.trunc_exponent(), tail_bound));
}

} // namespace

QSeries hyper_solution(const std::array<Rational, 3>& r, int i, long terms) {
    if (i < 1 || i > 3) throw DomainError("hyper_solution index must be 1, 2 or 3");
    const Rational& ri = r[static_cast<size_t>(i - 1)];
    const Rational& rj = r[static_cast<size_t>(i % 3)];
    const Rational& rk = r[static_cast<size_t>((i + 1) % 3)];
    HyperParams p;
    p.upper = {ri, ri + Rational(1, 3), ri + Rational(2, 3)};
    p.lower = {ri - rj + 1, ri - rk + 1};
    long depth = terms + 2;
    QSeries K = kappa(depth);
    std::vector<Rational> z = f32_series(p, depth);
    QSeries series = compose_with(z, K);
    // K^(r_i)/1728^(r_i) = q^(r_i) u^(r_i) with u = K/(1728 q), leading 1
    QSeries u = K.shifted(Rational(-1)).scaled(Rational(1, 1728));
    return u.pow(ri).shifted(ri) * series;
}

std::pair<QSeries, QSeries> xy_hypergeometric_check(long terms) {
    long depth = terms + 2;
    auto [gx, gy] = xy_generators(depth);
    QSeries K = kappa(depth);
    QSeries j = j_function(depth);
    // j^e = q^(-e) v^e with v = q j, leading coefficient 1
    QSeries v = j.shifted(Rational(1));

    HyperParams px{{Rational(-1, 6), Rational(1, 6), Rational(1, 2)},
                   {Rational(1, 2), Rational(1, 2)}};
    QSeries hx = v.pow(Rational(1, 6)).shifted(Rational(-1, 6)) *
                 compose_with(f32_series(px, depth), K);

    HyperParams py{{Rational(1, 3), Rational(2, 3), Rational(1)},
                   {Rational(3, 2), Rational(1)}};
    QSeries hy = v.pow(Rational(-1, 3)).shifted(Rational(1, 3)) *
                 compose_with(f32_series(py, depth), K);

    return {gx.series - hx, gy.series - hy};
}

} // namespace mldelab
