#include "mldelab/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mldelab/errors.hpp"

namespace mldelab {

namespace {

// Exponent e as a slot numerator over ram N, or -1 when off-grid.
long slot_numerator(const Rational& e, long ram) {
    Rational scaled = e * ram;
    if (!is_integer(scaled)) return -1;
    return to_long(scaled.get_num());
}

} // namespace

void QSeries::canonicalize() {
    size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        lead_ = trunc_;
        return;
    }
    if (first > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
        lead_ += static_cast<long>(first);
    }
    coeffs_.resize(static_cast<size_t>(trunc_ - lead_));
}

QSeries QSeries::zero(long ram, long trunc) {
    if (ram < 1) throw DomainError("ram must be positive");
    QSeries s;
    s.ram_ = ram;
    s.lead_ = trunc;
    s.trunc_ = trunc;
    return s;
}

QSeries QSeries::constant(const Rational& value, long trunc_exponent) {
    if (value == 0) return zero(1, trunc_exponent);
    QSeries s;
    s.ram_ = 1;
    s.lead_ = 0;
    s.trunc_ = trunc_exponent;
    if (trunc_exponent <= 0) throw DomainError("constant requires positive truncation");
    s.coeffs_.assign(static_cast<size_t>(trunc_exponent), Rational(0));
    s.coeffs_[0] = value;
    return s;
}

QSeries QSeries::monomial(const Rational& c, const Rational& e, const Rational& trunc_exponent) {
    long ram = to_long(lcm(e.get_den(), trunc_exponent.get_den()));
    long lead = to_long(Rational(e * ram).get_num());
    long trunc = to_long(Rational(trunc_exponent * ram).get_num());
    if (c == 0) return zero(ram, trunc);
    if (trunc <= lead) throw DomainError("monomial exponent at or beyond truncation");
    QSeries s;
    s.ram_ = ram;
    s.lead_ = lead;
    s.trunc_ = trunc;
    s.coeffs_.assign(static_cast<size_t>(trunc - lead), Rational(0));
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::from_coeffs(long ram, long lead, std::vector<Rational> coeffs, long trunc) {
    if (ram < 1) throw DomainError("ram must be positive");
    if (trunc < lead + static_cast<long>(coeffs.size()))
        throw DomainError("coefficients extend past the truncation bound");
    QSeries s;
    s.ram_ = ram;
    s.lead_ = lead;
    s.trunc_ = trunc;
    s.coeffs_ = std::move(coeffs);
    s.coeffs_.resize(static_cast<size_t>(trunc - lead));
    s.canonicalize();
    return s;
}

Rational QSeries::leading_coefficient() const {
    if (is_zero()) throw ZeroSeriesError("zero series has no leading coefficient");
    return coeffs_[0];
}

Rational QSeries::coeff(const Rational& e) const {
    if (e >= trunc_exponent())
        throw TruncationError("coefficient at exponent " + rat_str(e) +
                              " requested at or beyond truncation " + rat_str(trunc_exponent()));
    long num = slot_numerator(e, ram_);
    if (num < 0 && !is_integer(e * ram_)) return Rational(0);
    long idx = num - lead_;
    if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(idx)];
}

std::vector<Rational> QSeries::coeffs_at(const Rational& start, const Rational& step, long count) const {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(count));
    Rational e = start;
    for (long i = 0; i < count; ++i, e += step) out.push_back(coeff(e));
    return out;
}

std::vector<Rational> QSeries::integer_tail(long count) const {
    if (is_zero()) return std::vector<Rational>(static_cast<size_t>(count), Rational(0));
    return coeffs_at(lead_exponent(), Rational(1), count);
}

QSeries QSeries::operator-() const { return scaled(Rational(-1)); }

QSeries QSeries::scaled(const Rational& c) const {
    if (c == 0) return zero(ram_, trunc_);
    QSeries s = *this;
    for (auto& v : s.coeffs_) v *= c;
    return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    long ram = lcm_long(a.ram_, b.ram_);
    long fa = ram / a.ram_, fb = ram / b.ram_;
    long trunc = std::min(a.trunc_ * fa, b.trunc_ * fb);
    long lead = std::min(std::min(a.lead_ * fa, b.lead_ * fb), trunc);
    QSeries s;
    s.ram_ = ram;
    s.lead_ = lead;
    s.trunc_ = trunc;
    s.coeffs_.assign(static_cast<size_t>(trunc - lead), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        long pos = a.lead_ * fa + static_cast<long>(i) * fa - lead;
        if (pos >= 0 && pos < trunc - lead) s.coeffs_[static_cast<size_t>(pos)] += a.coeffs_[i];
    }
    for (size_t i = 0; i < b.coeffs_.size(); ++i) {
        long pos = b.lead_ * fb + static_cast<long>(i) * fb - lead;
        if (pos >= 0 && pos < trunc - lead) s.coeffs_[static_cast<size_t>(pos)] += b.coeffs_[i];
    }
    s.canonicalize();
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.is_zero() || b.is_zero()) {
        // lead == trunc for a zero factor, so both min-arguments coincide.
        Rational bound = std::min(a.trunc_exponent() + b.lead_exponent(),
                                  b.trunc_exponent() + a.lead_exponent());
        long ram = lcm_long(a.ram_, b.ram_);
        return QSeries::zero(ram, to_long(ceil_rat(bound * ram)));
    }
    QSeries ar = a.reduced();
    QSeries br = b.reduced();
    long ram = lcm_long(ar.ram_, br.ram_);
    long fa = ram / ar.ram_, fb = ram / br.ram_;
    long lead = ar.lead_ * fa + br.lead_ * fb;
    long trunc = std::min(ar.trunc_ * fa + br.lead_ * fb, br.trunc_ * fb + ar.lead_ * fa);
    QSeries s;
    s.ram_ = ram;
    s.lead_ = lead;
    s.trunc_ = trunc;
    s.coeffs_.assign(static_cast<size_t>(trunc - lead), Rational(0));
    long span = trunc - lead;
    for (size_t i = 0; i < ar.coeffs_.size(); ++i) {
        if (ar.coeffs_[i] == 0) continue;
        long base = static_cast<long>(i) * fa;
        if (base >= span) break;
        for (size_t j = 0; j < br.coeffs_.size(); ++j) {
            long pos = base + static_cast<long>(j) * fb;
            if (pos >= span) break;
            if (br.coeffs_[j] == 0) continue;
            s.coeffs_[static_cast<size_t>(pos)] += ar.coeffs_[i] * br.coeffs_[j];
        }
    }
    s.canonicalize();
    return s;
}

QSeries QSeries::inverted() const {
    if (is_zero()) throw ZeroSeriesError("cannot invert the zero series");
    QSeries ar = reduced();
    long span = ar.trunc_ - ar.lead_;
    std::vector<Rational> inv(static_cast<size_t>(span), Rational(0));
    inv[0] = 1 / ar.coeffs_[0];
    for (long k = 1; k < span; ++k) {
        Rational acc(0);
        for (long i = 1; i <= k; ++i) {
            const Rational& ai = ar.coeffs_[static_cast<size_t>(i)];
            if (ai == 0) continue;
            acc += ai * inv[static_cast<size_t>(k - i)];
        }
        inv[static_cast<size_t>(k)] = -acc / ar.coeffs_[0];
    }
    QSeries s;
    s.ram_ = ar.ram_;
    s.lead_ = -ar.lead_;
    s.trunc_ = ar.trunc_ - 2 * ar.lead_;
    s.coeffs_ = std::move(inv);
    s.canonicalize();
    return s;
}

QSeries QSeries::pow(const Rational& e) const {
    if (e == 0) {
        long span = trunc_ - lead_;
        return constant(Rational(1), std::max<long>(1, span / ram_ + (span % ram_ ? 1 : 0)));
    }
    if (is_zero()) {
        if (!is_nonneg_integer(e)) throw ZeroSeriesError("zero series to a non-positive-integer power");
        return *this;
    }
    if (is_integer(e)) {
        long n = to_long(e.get_num());
        if (n < 0) return pow(Rational(-n)).inverted();
        // repeated squaring on the unit part, exponent prefactor reattached
        QSeries ar = reduced();
        long v = ar.lead_;
        QSeries base = ar;
        base.lead_ -= v; // shift to lead 0
        base.trunc_ -= v;
        long exp = n;
        bool first = true;
        QSeries result;
        while (exp > 0) {
            if (exp & 1) {
                result = first ? base : result * base;
                first = false;
            }
            exp >>= 1;
            if (exp > 0) base = base * base;
        }
        QSeries out = result.shifted(rat(v * n, ar.ram_));
        return out;
    }
    if (coeffs_[0] != 1)
        throw NonUnitLeadingError("fractional power of a series with leading coefficient " +
                                  rat_str(coeffs_[0]));
    QSeries ar = reduced();
    long v = ar.lead_;
    QSeries u = ar;
    u.lead_ -= v;
    u.trunc_ -= v;
    u.coeffs_[0] = 0; // u := series - 1, positive lead
    u.canonicalize();
    // binomial series (1+u)^e = sum C(e,k) u^k, exact and finite to truncation
    long span = ar.trunc_ - ar.lead_;
    QSeries acc = QSeries::from_coeffs(u.ram_, 0, {Rational(1)}, span);
    QSeries term = acc;
    for (long k = 1; k < span && !term.is_zero(); ++k) {
        term = term * u;
        term = term.scaled((e - (k - 1)) / Rational(k));
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc.shifted(e * rat(v, ar.ram_));
}

QSeries QSeries::derived() const {
    QSeries s = *this;
    for (size_t i = 0; i < s.coeffs_.size(); ++i)
        s.coeffs_[i] *= rat(s.lead_ + static_cast<long>(i), s.ram_);
    s.canonicalize();
    return s;
}

QSeries QSeries::dilated(long k) const {
    if (k < 1) throw DomainError("dilation factor must be positive");
    if (k == 1) return *this;
    QSeries s;
    s.ram_ = ram_;
    s.lead_ = lead_ * k;
    s.trunc_ = trunc_ * k;
    s.coeffs_.assign(static_cast<size_t>(s.trunc_ - s.lead_), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        s.coeffs_[i * static_cast<size_t>(k)] = coeffs_[i];
    s.canonicalize();
    return s;
}

QSeries QSeries::shifted(const Rational& e) const {
    if (e == 0) return *this;
    long ram = lcm_long(ram_, to_long(Integer(e.get_den())));
    long f = ram / ram_;
    long off = to_long(Rational(e * ram).get_num());
    QSeries s;
    s.ram_ = ram;
    s.lead_ = lead_ * f + off;
    s.trunc_ = trunc_ * f + off;
    s.coeffs_.assign(static_cast<size_t>(s.trunc_ - s.lead_), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        s.coeffs_[i * static_cast<size_t>(f)] = coeffs_[i];
    s.canonicalize();
    return s;
}

QSeries QSeries::truncated(const Rational& e) const {
    if (e >= trunc_exponent()) return *this;
    Rational scaled = e * ram_;
    long t = is_integer(scaled) ? to_long(scaled.get_num()) : to_long(floor_rat(scaled));
    QSeries s = *this;
    s.trunc_ = t;
    if (s.trunc_ <= s.lead_) return zero(ram_, t);
    s.coeffs_.resize(static_cast<size_t>(s.trunc_ - s.lead_));
    s.canonicalize();
    return s;
}

QSeries QSeries::normalized() const {
    return scaled(1 / leading_coefficient());
}

Rational QSeries::support_step() const {
    long g = 0;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) g = gcd_long(g, static_cast<long>(i));
    if (g == 0) return Rational(1);
    return rat(g, ram_);
}

bool QSeries::agrees_with(const QSeries& other) const {
    return (*this - other).is_zero();
}

QSeries QSeries::reduced() const {
    if (ram_ == 1) return *this;
    long g = gcd_long(ram_, lead_);
    for (size_t i = 1; i < coeffs_.size() && g > 1; ++i)
        if (coeffs_[i] != 0) g = gcd_long(g, static_cast<long>(i));
    if (g <= 1) return *this;
    long new_trunc = trunc_ >= 0 ? trunc_ / g : -((-trunc_ + g - 1) / g); // floor(trunc/g)
    long new_lead = lead_ / g;
    if (new_trunc <= new_lead && !is_zero()) return *this;
    QSeries s;
    s.ram_ = ram_ / g;
    s.lead_ = new_lead;
    s.trunc_ = new_trunc;
    if (is_zero()) {
        s.lead_ = s.trunc_;
        return s;
    }
    s.coeffs_.assign(static_cast<size_t>(new_trunc - new_lead), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        long j = static_cast<long>(i) / g;
        if (j < new_trunc - new_lead) s.coeffs_[static_cast<size_t>(j)] = coeffs_[i];
    }
    s.canonicalize();
    return s;
}

std::string QSeries::str(long max_terms) const {
    if (is_zero()) return "0 + O(q^" + rat_str(trunc_exponent()) + ")";
    std::ostringstream os;
    long shown = 0;
    for (size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
        if (coeffs_[i] == 0) continue;
        Rational e(lead_ + static_cast<long>(i), ram_);
        if (shown > 0) os << " + ";
        os << "(" << rat_str(coeffs_[i]) << ")q^(" << rat_str(e) << ")";
        ++shown;
    }
    os << " + O(q^" << rat_str(trunc_exponent()) << ")";
    return os.str();
}

const QSeries& LogQSeries::plain() const {
    if (parts.empty()) throw ZeroSeriesError("empty LogQSeries");
    return parts[0];
}

LogIntegral integrate_dlog(const QSeries& f) {
    LogIntegral out;
    out.log_coefficient = 0;
    QSeries s = f;
    std::vector<Rational> c(f.coeffs());
    for (size_t i = 0; i < c.size(); ++i) {
        Rational e = rat(f.lead() + static_cast<long>(i), f.ram());
        if (e == 0) {
            out.log_coefficient = c[i];
            c[i] = 0;
        } else {
            c[i] /= e;
        }
    }
    out.series = QSeries::from_coeffs(f.ram(), f.lead(), std::move(c), f.trunc());
    return out;
}

} // namespace mldelab
