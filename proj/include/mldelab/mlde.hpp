#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mldelab/qseries.hpp"
#include "mldelab/ratfun.hpp"

namespace mldelab {

/// Monic third-order MLDE in the canonical form
///
///   f''' - (1/2) E2 f'' + ((1/2) E2' + P E4) f' + Q E6 f = 0,
///
/// with ' = q d/dq. The indicial cubic is t^3 - t^2/2 + P t + Q.
/// The importers below map the two sign conventions the source equations
/// use for the E4 term onto P.
struct MLDE3 {
    Rational P;
    Rational Q;
    std::string provenance;
    std::optional<std::pair<Rational, Rational>> ch;   // (c, h) when built from one
};

/// P = -(h^2 - h/2 - ch/8 + c^2/192 + c/24),
/// Q = (c/24)(c/12 + 1/2 - h)(h - c/24); roots {-c/24, h-c/24, c/12+1/2-h}.
MLDE3 mlde_from_ch(const Rational& c, const Rational& h);

/// D_n lattice equation: P = (n/48)(1 - n/4), Q = (n/24)^2 (1 - n/12).
/// DomainError for n < 4. Coincides with mlde_from_ch(n, 1/2).
MLDE3 mlde_from_dn(long n);

/// Serre-derivative form (d^3 + x E4 d + y E6) f = 0 at weight 0.
MLDE3 mlde_from_serre(const Rational& x, const Rational& y);

/// f''' - E2/2 f'' + (E2'/2 + x E4) f' + y E6 f = 0 (the appendix sign).
MLDE3 mlde_from_appendix(const Rational& x, const Rational& y);

/// f''' - E2/2 f'' + (E2'/2 - x E4) f' + y E6 f = 0 (the third-order display sign).
MLDE3 mlde_from_eq1(const Rational& x, const Rational& y);

Rational indicial_poly(const MLDE3& m, const Rational& t);

struct IndicialData {
    bool rational = false;
    std::array<Rational, 3> roots{};               // ascending when rational
    struct Resonance {
        int from;       // index of the smaller root
        int to;         // index of the larger root
        long step;      // positive integer difference
    };
    std::vector<Resonance> resonances;
    /// Positive steps at which the Frobenius denominator vanishes, per root.
    std::vector<long> resonance_steps(int root_index) const;
};

/// Exact root analysis of the indicial cubic. Roots are found by exact
/// square-free decomposition plus exact-sign bisection and verified by
/// substitution; `rational` is false when the cubic does not split over Q.
IndicialData indicial(const MLDE3& m);

enum class SolutionStatus { generic, resonant_free, logarithmic };

/// How to fix the free coefficient at a vanishing-obstruction resonance.
/// `zero` pins it to 0. `canonical` takes the limit of the Frobenius
/// coefficients along the (c, h)-family through the equation with the solved
/// root as vacuum exponent, which is the normalization the printed fixtures
/// use (it reproduces E4/eta^8 and E4^2/eta^16 at c = 8, 16).
enum class FreeCoeffGauge { zero, canonical };

struct FrobeniusSolution {
    Rational root;
    SolutionStatus status = SolutionStatus::generic;
    LogQSeries series;          // parts[0] plain part, parts[1] times log q
    Rational log_coefficient;   // C in parts[1] = C * partner solution
    std::vector<long> free_steps;
    std::vector<Rational> free_values;
};

/// Frobenius solution at an indicial root, leading coefficient 1, exact to
/// `terms` coefficient slots past the root. Coefficients are determined by
/// order-by-order linear solving of the substituted series; the operator
/// coefficients come from the Eisenstein expansions, not from a transcribed
/// recursion. Logarithmic solutions carry g + C (log q) * partner.
FrobeniusSolution frobenius_solve(const MLDE3& m, const Rational& root, long terms,
                                  FreeCoeffGauge gauge = FreeCoeffGauge::zero);

/// The paper-facing recursion in sigma_1, sigma_3, sigma_5 form, evaluated
/// with a symbolic conformal weight so that vanishing denominators cancel
/// against vanishing numerators where they do. ResonantStepError(n) when a
/// denominator vanishes without cancellation.
std::vector<Rational> printed_recursion(const Rational& c, const Rational& h,
                                        const Rational& root, long terms);

/// Apply the full operator, built from Eisenstein expansions, to a series:
/// the master oracle. Returns the residual.
QSeries mlde_apply(const MLDE3& m, const QSeries& f);
LogQSeries mlde_apply(const MLDE3& m, const LogQSeries& f);

/// Residual of the solution (including log parts) under its equation; zero
/// series in every part when f solves m.
bool mlde_annihilates(const MLDE3& m, const LogQSeries& f);
bool mlde_annihilates(const MLDE3& m, const QSeries& f);

/// Serre derivative at weight k: f' - (k/12) E2 f.
QSeries serre_derivative_k(const QSeries& f, const Rational& k);

/// Residual of d^3_k(f) + alpha E4 d_k(f) + (k(k+2)(k+4)/12^3 + k alpha/12) E6 f.
QSeries dform_apply(const Rational& k, const Rational& alpha, const QSeries& f);

/// Residual of the second-order operator f'' - (1/6) E2 f' - (1/18) E4 f.
QSeries kaneko_zagier_residual(const QSeries& f);

} // namespace mldelab
