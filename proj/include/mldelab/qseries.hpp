#pragma once

#include <string>
#include <vector>

#include "mldelab/rational.hpp"

namespace mldelab {

/// Truncated q-expansion with fractional exponents,
///
///   q^(lead/ram) * (c0 + c1 q^(1/ram) + c2 q^(2/ram) + ...),
///
/// exact rational coefficients throughout. `trunc` is an absolute exponent
/// bound: every coefficient of the underlying function at an exponent
/// strictly below trunc/ram equals the stored one (zero slots included).
/// Arithmetic computes the tightest sound truncation of the result and
/// refuses to report coefficients at or beyond it.
///
/// A nonzero series always has coeffs()[0] != 0; the zero series is stored
/// with an empty coefficient vector and lead == trunc.
class QSeries {
public:
    QSeries() : ram_(1), lead_(0), trunc_(0) {}

    static QSeries zero(long ram, long trunc);
    static QSeries constant(const Rational& value, long trunc_exponent);
    /// c * q^e, known strictly below trunc_exponent.
    static QSeries monomial(const Rational& c, const Rational& e, const Rational& trunc_exponent);
    static QSeries from_coeffs(long ram, long lead, std::vector<Rational> coeffs, long trunc);

    long ram() const { return ram_; }
    long lead() const { return lead_; }
    long trunc() const { return trunc_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    Rational lead_exponent() const { return rat(lead_, ram_); }
    Rational trunc_exponent() const { return rat(trunc_, ram_); }
    Rational leading_coefficient() const;

    /// Coefficient at exponent e; 0 off the stored grid, TruncationError at
    /// or beyond the truncation bound.
    Rational coeff(const Rational& e) const;

    /// `count` coefficients at exponents start, start+step, ... Reads through
    /// coeff(), so over-reading past the truncation throws.
    std::vector<Rational> coeffs_at(const Rational& start, const Rational& step, long count) const;
    /// Coefficients at lead, lead+1, lead+2, ... (how the paper prints series).
    std::vector<Rational> integer_tail(long count) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    QSeries inverted() const;                     // ZeroSeriesError on 0
    QSeries pow(const Rational& e) const;         // NonUnitLeadingError for fractional e
    QSeries derived() const;                      // q d/dq
    QSeries dilated(long k) const;                // q -> q^k
    QSeries shifted(const Rational& e) const;     // multiply by q^e
    QSeries scaled(const Rational& c) const;
    QSeries truncated(const Rational& e) const;   // lower the truncation bound
    QSeries normalized() const;                   // leading coefficient 1

    /// Smallest positive exponent step spanned by the nonzero support
    /// (1 for the zero series).
    Rational support_step() const;

    /// Equality on the common domain: the two series agree at every exponent
    /// below the smaller truncation bound.
    bool agrees_with(const QSeries& other) const;
    friend bool operator==(const QSeries& a, const QSeries& b) { return a.agrees_with(b); }

    /// Shrink ram by the gcd of lead, trunc grid and nonzero offsets.
    /// Never claims knowledge beyond the current bound.
    QSeries reduced() const;

    std::string str(long max_terms = 8) const;

private:
    void canonicalize();

    long ram_;
    long lead_;
    long trunc_;
    std::vector<Rational> coeffs_;
};

/// Finite log-polynomial with QSeries coefficients:
/// parts[0] + parts[1]*(log q) + parts[2]*(log q)^2 + ...
struct LogQSeries {
    std::vector<QSeries> parts;

    LogQSeries() = default;
    explicit LogQSeries(QSeries plain) : parts{std::move(plain)} {}
    LogQSeries(QSeries plain, QSeries log1) : parts{std::move(plain), std::move(log1)} {}

    bool is_plain() const { return parts.size() <= 1; }
    long log_degree() const { return static_cast<long>(parts.size()) - 1; }
    const QSeries& plain() const;
};

/// Integrate f dq/q termwise: the q^0 slot turns into c0*(log q), everything
/// else into q^e/e. Returns the log coefficient c0 and the power-series part.
struct LogIntegral {
    Rational log_coefficient;
    QSeries series;
};
LogIntegral integrate_dlog(const QSeries& f);

} // namespace mldelab
