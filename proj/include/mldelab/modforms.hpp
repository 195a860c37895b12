#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mldelab/qseries.hpp"

namespace mldelab {

/// A q-expansion with declared weight and congruence level. The labels are
/// bookkeeping; they are validated only through Sturm-bound equality tests.
struct GradedSeries {
    QSeries series;
    Rational weight;
    long group_level = 1;
};

struct BasisW {
    Rational weight;
    std::vector<GradedSeries> elements;
    std::vector<std::string> labels;
};

/// Serre derivative: weight k goes to k + 2.
GradedSeries serre_derivative(const GradedSeries& f);

/// The weight-0 generators on Gamma(2),
///   x = (2 E2(q^2) - E2(q)) / eta^4 = q^(-1/6)(1 + 28q + 134q^2 + ...),
///   y = eta(q^2)^8 / eta(q)^8    = q^(1/3)(1 + 8q + 36q^2 + ...).
std::pair<GradedSeries, GradedSeries> xy_generators(long terms);

/// Monomial bases of the relevant modular-form spaces on Gamma(2):
/// weight 4: eta^8 {x^2, xy, y^2}; weight 8: eta^16 {x^2y^2, y^4, xy^3, x^3y};
/// weight 14: eta^28 {x^7, x^5y^2, x^3y^4, xy^6, y^7}.
BasisW gamma2_basis(int weight, long terms);

/// Number of initial q-expansion coefficients certifying equality of two
/// forms of the given weight on a group of the given index:
/// ceil(weight * index / 12) + 1. DomainError on negative weight.
long sturm_depth(const Rational& weight, long index);

/// Exact coordinates of f in the basis span, certified to Sturm depth and
/// checked against every available coefficient. NotInSpanError when f does
/// not lie in the span.
std::vector<Rational> identify_in_basis(const QSeries& f, const BasisW& basis);

} // namespace mldelab
