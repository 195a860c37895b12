#include "mldelab/lattice.hpp"

#include "mldelab/errors.hpp"
#include "mldelab/modforms.hpp"
#include "mldelab/standard_series.hpp"

namespace mldelab {

QSeries dn_theta(long n, DnCoset coset, long terms) {
    if (n < 4) throw DomainError("dn_theta needs n >= 4");
    long depth = terms + 1;
    switch (coset) {
        case DnCoset::L:
        case DnCoset::xi: {
            QSeries t3 = jacobi_theta(3, 1, depth).pow(Rational(n));
            QSeries t0 = jacobi_theta(0, 1, depth).pow(Rational(n));
            QSeries s = coset == DnCoset::L ? t3 + t0 : t3 - t0;
            return s.scaled(Rational(1, 2));
        }
        case DnCoset::eta:
            return jacobi_theta(2, 1, depth).pow(Rational(n)).scaled(Rational(1, 2));
    }
    throw DomainError("bad coset");
}

namespace {

std::optional<int> find_nonintegral(const std::array<QSeries, 3>& members) {
    for (int i = 0; i < 3; ++i) {
        QSeries s = members[static_cast<size_t>(i)].normalized();
        for (const auto& v : s.coeffs())
            if (!is_integer(v)) return i;
    }
    return std::nullopt;
}

} // namespace

CharacterTriple dn_characters(long n, long terms) {
    if (n < 4) throw DomainError("dn_characters needs n >= 4");
    long depth = terms + n / 12 + 3;
    QSeries etan_inv = eta_power(-n, depth);
    CharacterTriple t;
    t.label = "D" + std::to_string(n);
    t.c = Rational(n);
    t.weights = {Rational(0), Rational(1, 2), rat(n, 8)};
    t.members = {dn_theta(n, DnCoset::L, depth) * etan_inv,
                 dn_theta(n, DnCoset::xi, depth) * etan_inv,
                 dn_theta(n, DnCoset::eta, depth) * etan_inv};
    for (int i = 0; i < 3; ++i)
        t.leading[static_cast<size_t>(i)] = t.members[static_cast<size_t>(i)].leading_coefficient();
    t.nonintegral_member = find_nonintegral(t.members);
    return t;
}

QSeries barnes_wall_theta(long terms) {
    long depth = terms + 1;
    QSeries t2 = jacobi_theta(2, 2, depth);
    QSeries t3 = jacobi_theta(3, 2, depth);
    QSeries t0 = jacobi_theta(0, 2, depth);
    QSeries s = t2.pow(Rational(16)) + t3.pow(Rational(16)) + t0.pow(Rational(16)) +
                (t2.pow(Rational(8)) * t3.pow(Rational(8))).scaled(30);
    return s.scaled(Rational(1, 2));
}

CharacterTriple bw_characters(long terms) {
    long depth = terms + 4;
    QSeries eta16_inv = eta_power(-16, depth);
    QSeries t2 = jacobi_theta(2, 1, depth);
    QSeries t3 = jacobi_theta(3, 1, depth);
    QSeries t0 = jacobi_theta(0, 1, depth);
    QSeries t28 = t2.pow(Rational(8));
    QSeries t38 = t3.pow(Rational(8));
    QSeries t08 = t0.pow(Rational(8));
    CharacterTriple t;
    t.label = "BarnesWall";
    t.c = 16;
    t.weights = {Rational(0), Rational(1), Rational(3, 2)};
    t.members = {barnes_wall_theta(depth) * eta16_inv,
                 (t28 * (t38 + t08)).scaled(Rational(1, 16)) * eta16_inv,
                 (t28 * (t38 - t08)).scaled(Rational(1, 16)) * eta16_inv};
    for (int i = 0; i < 3; ++i)
        t.leading[static_cast<size_t>(i)] = t.members[static_cast<size_t>(i)].leading_coefficient();
    t.nonintegral_member = find_nonintegral(t.members);
    return t;
}

CharacterTriple sqrt2e8_characters(long terms) {
    long depth = terms + 3;
    auto [gx, gy] = xy_generators(depth);
    const QSeries& x = gx.series;
    const QSeries& y = gy.series;
    QSeries y2 = y.pow(Rational(2));
    CharacterTriple t;
    t.label = "sqrt2E8";
    t.c = 8;
    t.weights = {Rational(0), Rational(1, 2), Rational(1)};
    t.members = {x.pow(Rational(2)) - y2.scaled(48), (x * y).scaled(16), y2.scaled(128)};
    for (int i = 0; i < 3; ++i)
        t.leading[static_cast<size_t>(i)] = t.members[static_cast<size_t>(i)].leading_coefficient();
    t.nonintegral_member = find_nonintegral(t.members);
    return t;
}

CharacterTriple orbifold_characters(const std::string& which, long terms) {
    long depth = terms + 4;
    CharacterTriple t;
    if (which == "sqrt2e8_plus") {
        QSeries eta8_inv = eta_power(-8, depth);
        QSeries e4q2 = eisenstein(4, depth / 2 + 2).dilated(2);
        QSeries t28 = jacobi_theta(2, 1, depth).pow(Rational(8));
        QSeries t38 = jacobi_theta(3, 1, depth).pow(Rational(8));
        QSeries t08 = jacobi_theta(0, 1, depth).pow(Rational(8));
        t.label = "sqrt2E8_plus";
        t.c = 8;
        t.weights = {Rational(0), Rational(1, 2), Rational(1)};
        t.members = {(e4q2.scaled(32) - t28).scaled(Rational(1, 32)) * eta8_inv,
                     (t38 - t08) * eta8_inv,
                     t28.scaled(8) * eta8_inv};
    } else if (which == "bw_plus") {
        QSeries eta16_inv = eta_power(-16, depth);
        QSeries t2 = jacobi_theta(2, 1, depth);
        QSeries t3 = jacobi_theta(3, 1, depth);
        QSeries t0 = jacobi_theta(0, 1, depth);
        QSeries t28 = t2.pow(Rational(8));
        QSeries t38 = t3.pow(Rational(8));
        QSeries t08 = t0.pow(Rational(8));
        QSeries t016 = jacobi_theta(0, 2, depth).pow(Rational(16));
        t.label = "BarnesWall_plus";
        t.c = 16;
        t.weights = {Rational(0), Rational(1), Rational(3, 2)};
        t.members = {(barnes_wall_theta(depth) + t016).scaled(Rational(1, 2)) * eta16_inv,
                     (t28 * (t38 + t08)).scaled(Rational(1, 32)) * eta16_inv,
                     (t28 * (t38 - t08)).scaled(Rational(1, 32)) * eta16_inv};
    } else {
        throw UnknownNameError("unknown orbifold '" + which + "'");
    }
    for (int i = 0; i < 3; ++i)
        t.leading[static_cast<size_t>(i)] = t.members[static_cast<size_t>(i)].leading_coefficient();
    t.nonintegral_member = find_nonintegral(t.members);
    return t;
}

LevelInfo level_info(long n) {
    if (n < 1) throw DomainError("level_info needs n >= 1");
    LevelInfo info;
    info.n = n;
    long N = 1;
    for (long d = 1; d <= 4; ++d)
        if (n % d == 0) N = d;
    switch (N) {
        case 1: info.N1 = 8; break;
        case 2: info.N1 = 4; break;
        case 3: info.N1 = 8; break;
        default: info.N1 = 2; break;
    }
    switch (gcd_long(n, 24)) {
        case 1: info.N2 = 24; break;
        case 2: info.N2 = 12; break;
        case 3: info.N2 = 8; break;
        case 4: info.N2 = 6; break;
        case 6: info.N2 = 4; break;
        case 8: info.N2 = 3; break;
        case 12: info.N2 = 2; break;
        default: info.N2 = 1; break;
    }
    switch (gcd_long(n, 12)) {
        case 1: info.N3 = 24; break;
        case 2: info.N3 = 12; break;
        case 3: info.N3 = 8; break;
        case 4: info.N3 = 6; break;
        case 6: info.N3 = 4; break;
        default: info.N3 = 2; break;
    }
    return info;
}

bool wronskian_exponent_check(const CharacterTriple& t) {
    Rational sum(0);
    for (const auto& m : t.members) sum += m.lead_exponent();
    return Rational(3 * (3 - 1)) - 12 * sum == 0;
}

bool nonneg_integral(const QSeries& s) {
    for (const auto& v : s.coeffs())
        if (!is_integer(v) || sgn(v) < 0) return false;
    return true;
}

} // namespace mldelab
