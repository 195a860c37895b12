#include "mldelab/modforms.hpp"

#include <set>

#include "mldelab/errors.hpp"
#include "mldelab/mlde.hpp"
#include "mldelab/standard_series.hpp"

namespace mldelab {

GradedSeries serre_derivative(const GradedSeries& f) {
    GradedSeries out;
    out.series = serre_derivative_k(f.series, f.weight);
    out.weight = f.weight + 2;
    out.group_level = f.group_level;
    return out;
}

std::pair<GradedSeries, GradedSeries> xy_generators(long terms) {
    long depth = terms + 2;
    QSeries h2 = aux_series("H2", depth);
    QSeries eta4_inv = eta_power(-4, depth);
    QSeries x = h2 * eta4_inv;
    QSeries y = dedekind_eta(depth / 2 + 2).dilated(2).pow(Rational(8)) * eta_power(-8, depth);
    GradedSeries gx{x, Rational(0), 2};
    GradedSeries gy{y, Rational(0), 2};
    return {gx, gy};
}

BasisW gamma2_basis(int weight, long terms) {
    long depth = terms + 4;
    auto [gx, gy] = xy_generators(depth);
    const QSeries& x = gx.series;
    const QSeries& y = gy.series;

    BasisW basis;
    basis.weight = weight;
    auto push = [&](const QSeries& s, const std::string& label) {
        basis.elements.push_back(GradedSeries{s, Rational(weight), 2});
        basis.labels.push_back(label);
    };
    switch (weight) {
        case 4: {
            QSeries eta8 = eta_power(8, depth);
            push(eta8 * x.pow(Rational(2)), "eta8*x^2");
            push(eta8 * (x * y), "eta8*x*y");
            push(eta8 * y.pow(Rational(2)), "eta8*y^2");
            break;
        }
        case 8: {
            QSeries eta16 = eta_power(16, depth);
            push(eta16 * x.pow(Rational(2)) * y.pow(Rational(2)), "eta16*x^2*y^2");
            push(eta16 * y.pow(Rational(4)), "eta16*y^4");
            push(eta16 * x * y.pow(Rational(3)), "eta16*x*y^3");
            push(eta16 * x.pow(Rational(3)) * y, "eta16*x^3*y");
            break;
        }
        case 14: {
            QSeries eta28 = eta_power(28, depth);
            push(eta28 * x.pow(Rational(7)), "eta28*x^7");
            push(eta28 * x.pow(Rational(5)) * y.pow(Rational(2)), "eta28*x^5*y^2");
            push(eta28 * x.pow(Rational(3)) * y.pow(Rational(4)), "eta28*x^3*y^4");
            push(eta28 * x * y.pow(Rational(6)), "eta28*x*y^6");
            push(eta28 * y.pow(Rational(7)), "eta28*y^7");
            break;
        }
        default:
            throw DomainError("gamma2_basis supports weights 4, 8, 14");
    }
    return basis;
}

long sturm_depth(const Rational& weight, long index) {
    if (sgn(weight) < 0) throw DomainError("negative weight in sturm_depth");
    if (index < 1) throw DomainError("group index must be positive");
    return to_long(ceil_rat(weight * index / 12)) + 1;
}

std::vector<Rational> identify_in_basis(const QSeries& f, const BasisW& basis) {
    if (basis.elements.empty()) throw DomainError("empty basis");
    size_t k = basis.elements.size();
    long depth = sturm_depth(basis.weight, 6);

    // collect the exponent grid shared by f and the basis up to the smallest
    // truncation bound, at least Sturm-depth many steps past the lowest lead
    long ram = f.is_zero() ? 1 : f.ram();
    Rational bound = f.trunc_exponent();
    Rational low = f.is_zero() ? Rational(0) : f.lead_exponent();
    for (const auto& e : basis.elements) {
        ram = lcm_long(ram, e.series.ram());
        bound = std::min(bound, e.series.trunc_exponent());
        low = std::min(low, e.series.lead_exponent());
    }
    Rational need = low + depth + 2;
    bound = std::min(bound, need);

    std::vector<Rational> exponents;
    for (Rational e = low; e < bound; e += Rational(1, ram)) exponents.push_back(e);

    // exact Gaussian elimination with first-nonzero pivoting on [B | f]
    std::vector<std::vector<Rational>> rows;
    for (const auto& e : exponents) {
        std::vector<Rational> row;
        row.reserve(k + 1);
        for (const auto& b : basis.elements) row.push_back(b.series.coeff(e));
        row.push_back(f.coeff(e));
        rows.push_back(std::move(row));
    }
    std::vector<long> pivot_row(k, -1);
    long r = 0;
    for (size_t col = 0; col < k && r < static_cast<long>(rows.size()); ++col) {
        long p = -1;
        for (long i = r; i < static_cast<long>(rows.size()); ++i)
            if (rows[static_cast<size_t>(i)][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[static_cast<size_t>(p)], rows[static_cast<size_t>(r)]);
        Rational inv = 1 / rows[static_cast<size_t>(r)][col];
        for (auto& v : rows[static_cast<size_t>(r)]) v *= inv;
        for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
            if (i == r) continue;
            Rational factor = rows[static_cast<size_t>(i)][col];
            if (factor == 0) continue;
            for (size_t j = col; j <= k; ++j)
                rows[static_cast<size_t>(i)][j] -= factor * rows[static_cast<size_t>(r)][j];
        }
        pivot_row[col] = r;
        ++r;
    }
    std::vector<Rational> coords(k, Rational(0));
    for (size_t col = 0; col < k; ++col) {
        if (pivot_row[col] < 0)
            throw NotInSpanError("basis not of full rank over the compared slots");
        coords[col] = rows[static_cast<size_t>(pivot_row[col])][k];
    }
    // all remaining rows must be consistent: residual zero
    for (long i = r; i < static_cast<long>(rows.size()); ++i)
        if (rows[static_cast<size_t>(i)][k] != 0)
            throw NotInSpanError("nonzero residual: series is not in the span");
    // recombine and compare on the full common domain
    QSeries recombined;
    bool first = true;
    for (size_t j = 0; j < k; ++j) {
        QSeries t = basis.elements[j].series.scaled(coords[j]);
        recombined = first ? t : recombined + t;
        first = false;
    }
    if (!(recombined.truncated(bound) == f.truncated(bound)))
        throw NotInSpanError("residual beyond Sturm depth");
    return coords;
}

} // namespace mldelab
