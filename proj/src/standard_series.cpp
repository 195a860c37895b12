#include "mldelab/standard_series.hpp"

#include <vector>

#include "mldelab/errors.hpp"

namespace mldelab {

Integer divisor_sigma(unsigned m, long n) {
    if (n < 1) throw DomainError("divisor_sigma needs n >= 1");
    Integer total(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), m);
        total += p;
        long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), m);
            total += p;
        }
    }
    return total;
}

QSeries eisenstein(int k, long terms) {
    long factor;
    unsigned m;
    switch (k) {
        case 2: factor = -24; m = 1; break;
        case 4: factor = 240; m = 3; break;
        case 6: factor = -504; m = 5; break;
        default: throw DomainError("eisenstein weight must be 2, 4 or 6");
    }
    std::vector<Rational> c(static_cast<size_t>(terms), Rational(0));
    c[0] = 1;
    for (long n = 1; n < terms; ++n)
        c[static_cast<size_t>(n)] = Rational(factor) * Rational(divisor_sigma(m, n));
    return QSeries::from_coeffs(1, 0, std::move(c), terms);
}

namespace {

// prod (1 - q^n) to depth `terms` (integer grid).
std::vector<Rational> euler_product(long terms) {
    std::vector<Rational> c(static_cast<size_t>(terms), Rational(0));
    c[0] = 1;
    for (long n = 1; n < terms; ++n)
        for (long e = terms - 1; e >= n; --e)
            c[static_cast<size_t>(e)] -= c[static_cast<size_t>(e - n)];
    return c;
}

// prod over n in residue set (1 - q^n)^(-1) to depth `terms`.
std::vector<Rational> inverse_product_over(const std::vector<long>& periods_mod,
                                           long modulus, long terms) {
    std::vector<Rational> c(static_cast<size_t>(terms), Rational(0));
    c[0] = 1;
    for (long n = 1; n < terms; ++n) {
        bool in_set = false;
        for (long r : periods_mod)
            if (n % modulus == r) in_set = true;
        if (!in_set) continue;
        for (long e = n; e < terms; ++e)
            c[static_cast<size_t>(e)] += c[static_cast<size_t>(e - n)];
    }
    return c;
}

} // namespace

QSeries dedekind_eta(long terms) {
    QSeries unit = QSeries::from_coeffs(1, 0, euler_product(terms), terms);
    return unit.shifted(Rational(1, 24));
}

QSeries eta_power(long n, long terms) {
    if (n == 0) return QSeries::constant(1, terms);
    long depth = terms + (std::abs(n) / 12) + 2;
    QSeries unit = QSeries::from_coeffs(1, 0, euler_product(depth), depth);
    QSeries p = unit.pow(Rational(n < 0 ? -n : n));
    if (n < 0) p = p.inverted();
    return p.shifted(Rational(n, 24)).truncated(Rational(terms));
}

QSeries jacobi_theta(int which, int scale, long terms) {
    if (scale != 1 && scale != 2) throw DomainError("theta scale must be q or q^2");
    const long ram = 8;
    long trunc = terms * ram;
    std::vector<Rational> c;
    long lead = 0;
    switch (which) {
        case 3:
        case 0: {
            // exponents scale * n^2/2, slot numerators scale*4n^2
            lead = 0;
            c.assign(static_cast<size_t>(trunc), Rational(0));
            c[0] = 1;
            for (long n = 1;; ++n) {
                long slot = scale * 4 * n * n;
                if (slot >= trunc) break;
                Rational v = (which == 3 || n % 2 == 0) ? Rational(2) : Rational(-2);
                c[static_cast<size_t>(slot)] += v;
            }
            break;
        }
        case 2: {
            // exponents scale * (n+1/2)^2/2, slot numerators scale*(2n+1)^2
            lead = scale * 1;
            c.assign(static_cast<size_t>(trunc - lead), Rational(0));
            for (long n = 0;; ++n) {
                long slot = scale * (2 * n + 1) * (2 * n + 1);
                if (slot >= trunc) break;
                c[static_cast<size_t>(slot - lead)] += 2;
            }
            break;
        }
        default:
            throw DomainError("theta index must be 2, 3 or 0");
    }
    return QSeries::from_coeffs(ram, lead, std::move(c), trunc);
}

namespace {

int legendre_mod3(long d) {
    switch (d % 3) {
        case 1: return 1;
        case 2: return -1;
        default: return 0;
    }
}

} // namespace

QSeries aux_series(const std::string& name, long terms) {
    if (name == "I3") {
        std::vector<Rational> c(static_cast<size_t>(terms), Rational(0));
        c[0] = 1;
        for (long n = 1; n < terms; ++n) {
            long s = 0;
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) s += legendre_mod3(d);
            c[static_cast<size_t>(n)] = Rational(6 * s);
        }
        return QSeries::from_coeffs(1, 0, std::move(c), terms);
    }
    if (name == "Delta3")
        return dedekind_eta((terms + 2) / 3 + 2).dilated(3).pow(Rational(3)) *
               dedekind_eta(terms + 2).inverted();
    if (name == "Delta2")
        return dedekind_eta((terms + 2) / 2 + 2).dilated(2).pow(Rational(8)) *
               eta_power(-4, terms + 2);
    if (name == "Delta2A")
        return eta_power(8, terms + 2) * dedekind_eta((terms + 2) / 2 + 2).dilated(2).pow(Rational(8));
    if (name == "Delta3A")
        return eta_power(6, terms + 2) * dedekind_eta((terms + 2) / 3 + 2).dilated(3).pow(Rational(6));
    if (name == "H2")
        return eisenstein(2, terms / 2 + 1).dilated(2).scaled(2) - eisenstein(2, terms);
    // The +-1 product carries the -1/60 prefactor: only this pairing
    // reproduces the printed q^(-1/6)(1 + 24q + 124q^2 + ...) combination.
    if (name == "psi1")
        return QSeries::from_coeffs(1, 0, inverse_product_over({1, 4}, 5, terms + 1), terms + 1)
            .shifted(Rational(-1, 60));
    if (name == "psi2")
        return QSeries::from_coeffs(1, 0, inverse_product_over({2, 3}, 5, terms + 1), terms + 1)
            .shifted(Rational(11, 60));
    throw UnknownNameError("unknown auxiliary series '" + name + "'");
}

} // namespace mldelab
