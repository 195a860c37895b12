#pragma once

#include <vector>

#include "mldelab/rational.hpp"

namespace mldelab {

/// Dense univariate polynomial over the rationals.
class QPoly {
public:
    QPoly() = default;
    QPoly(Rational constant) { c_.push_back(std::move(constant)); normalize(); }
    QPoly(long constant) : QPoly(Rational(constant)) {}
    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static QPoly variable() { return QPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(long i) const {
        return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[static_cast<size_t>(i)] : Rational(0);
    }
    Rational leading() const;

    Rational operator()(const Rational& x) const;   // Horner
    QPoly derivative() const;
    /// Taylor shift: p(x + a) as a polynomial in x.
    QPoly shifted(const Rational& a) const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    /// Exact division; DomainError if the remainder is nonzero.
    QPoly divided_by(const QPoly& d) const;
    /// Quotient and remainder.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
    /// Monic gcd.
    static QPoly gcd(QPoly a, QPoly b);

    QPoly monic() const;

private:
    void normalize();
    std::vector<Rational> c_;   // c_[i] multiplies x^i; no trailing zeros
};

/// Rational function num/den over Q, kept reduced with a monic denominator.
/// This is the coefficient field for symbolic-parameter Frobenius runs.
class RatFun {
public:
    RatFun() : num_(Rational(0)), den_(Rational(1)) {}
    RatFun(Rational constant) : num_(std::move(constant)), den_(Rational(1)) {}
    RatFun(long constant) : num_(Rational(constant)), den_(Rational(1)) {}
    RatFun(QPoly num, QPoly den);
    static RatFun variable() { return RatFun(QPoly::variable(), QPoly(Rational(1))); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun operator-() const;
    friend bool operator==(const RatFun& a, const RatFun& b);

    /// Value at x0; PoleError if the reduced denominator vanishes there.
    Rational operator()(const Rational& x0) const;
    bool has_pole_at(const Rational& x0) const;
    long pole_order(const Rational& x0) const;
    /// Laurent coefficients around x0 starting at (x - x0)^(-pole_order),
    /// `count` of them.
    std::vector<Rational> laurent(const Rational& x0, long count) const;

private:
    QPoly num_, den_;
};

} // namespace mldelab
