#pragma once

#include <array>
#include <optional>
#include <string>

#include "mldelab/qseries.hpp"

namespace mldelab {

/// Character triple of a rank-c lattice theory: members are the actual
/// characters (vacuum first) with their true leading coefficients; the
/// normalized views divide those out. `nonintegral_member` flags a member
/// whose leading-1 normalization has a non-integral coefficient (the
/// documented D20 xi-character case).
struct CharacterTriple {
    std::string label;
    Rational c;
    std::array<Rational, 3> weights;
    std::array<QSeries, 3> members;
    std::array<Rational, 3> leading;
    std::optional<int> nonintegral_member;

    QSeries normalized_member(int i) const { return members[static_cast<size_t>(i)].normalized(); }
};

enum class DnCoset { L, xi, eta };

/// Theta series of D_n and its dual cosets:
/// Theta_L = (theta3^n + theta0^n)/2, Theta_{xi+L} = (theta3^n - theta0^n)/2,
/// Theta_{eta+L} = theta2^n / 2.
QSeries dn_theta(long n, DnCoset coset, long terms);

/// Characters Theta / eta^n; vacuum second coefficient n(2n-1).
CharacterTriple dn_characters(long n, long terms);

/// Theta series of the Barnes-Wall lattice,
/// (theta2(q^2)^16 + theta3(q^2)^16 + theta0(q^2)^16 + 30 theta2(q^2)^8 theta3(q^2)^8)/2
/// = 1 + 4320 q^2 + 61440 q^3 + ...
QSeries barnes_wall_theta(long terms);

/// Barnes-Wall character triple: vacuum Theta/eta^16, weight-1
/// theta2^8(theta3^8+theta0^8)/16 eta^16, weight-3/2 theta2^8(theta3^8-theta0^8)/16 eta^16.
CharacterTriple bw_characters(long terms);

/// sqrt(2)E8 triple {x^2 - 48y^2, 16xy, 128y^2}, leading coefficients 1, 16, 128.
CharacterTriple sqrt2e8_characters(long terms);

/// Orbifold variants: "sqrt2e8_plus" and "bw_plus".
CharacterTriple orbifold_characters(const std::string& which, long terms);

/// Level bookkeeping for theta powers, eta powers and D_n characters.
struct LevelInfo {
    long n;
    long N1;   // level of theta_i^n, keyed by the largest divisor of n at most 4
    long N2;   // level of eta^n, keyed by gcd(n, 24)
    long N3;   // level of the D_n characters, keyed by gcd(n, 12)
};
LevelInfo level_info(long n);

/// Non-zero Wronskian condition n(n+k-1) - 12 sum(lambda_i) = 0 for the
/// triple's leading exponents (n = 3, k = 0).
bool wronskian_exponent_check(const CharacterTriple& t);

/// All computed coefficients are non-negative integers.
bool nonneg_integral(const QSeries& s);

} // namespace mldelab
