#include "mldelab/ratfun.hpp"

#include <algorithm>

#include "mldelab/errors.hpp"

namespace mldelab {

void QPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::leading() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

Rational QPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return QPoly(std::move(d));
}

QPoly QPoly::shifted(const Rational& a) const {
    // synthetic Horner shift
    std::vector<Rational> out(c_.size(), Rational(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        for (size_t i = out.size(); i-- > 1;) out[i] = out[i] * a + out[i - 1];
        if (!out.empty()) out[0] = out[0] * a + *it;
    }
    return QPoly(std::move(out));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly QPoly::operator-() const {
    QPoly p = *this;
    for (auto& v : p.c_) v = -v;
    return p;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(c));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    long db = b.degree();
    std::vector<Rational> quot;
    if (static_cast<long>(rem.size()) - 1 >= db)
        quot.assign(rem.size() - static_cast<size_t>(db), Rational(0));
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        Rational f = rem[static_cast<size_t>(i)] / b.c_.back();
        if (f == 0) continue;
        quot[static_cast<size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= f * b.c_[static_cast<size_t>(j)];
    }
    q = QPoly(std::move(quot));
    r = QPoly(std::move(rem));
}

QPoly QPoly::divided_by(const QPoly& d) const {
    QPoly q, r;
    divmod(*this, d, q, r);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly p = *this;
    Rational l = p.c_.back();
    for (auto& v : p.c_) v /= l;
    return p;
}

RatFun::RatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(Rational(1));
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() >= 1) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    Rational l = den_.leading();
    if (l != 1) {
        std::vector<Rational> n = num_.coeffs(), d = den_.coeffs();
        for (auto& v : n) v /= l;
        for (auto& v : d) v /= l;
        num_ = QPoly(std::move(n));
        den_ = QPoly(std::move(d));
    }
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
RatFun RatFun::operator-() const { return RatFun(-num_, den_); }
RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}
RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DomainError("division of rational functions by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}
bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

Rational RatFun::operator()(const Rational& x0) const {
    Rational d = den_(x0);
    if (d == 0) throw PoleError("evaluation at a pole");
    return num_(x0) / d;
}

bool RatFun::has_pole_at(const Rational& x0) const { return den_(x0) == 0; }

long RatFun::pole_order(const Rational& x0) const {
    if (!has_pole_at(x0)) return 0;
    QPoly lin(std::vector<Rational>{-x0, Rational(1)});
    QPoly d = den_;
    long order = 0;
    while (d(x0) == 0) {
        d = d.divided_by(lin);
        ++order;
    }
    return order;
}

std::vector<Rational> RatFun::laurent(const Rational& x0, long count) const {
    // shift to x0, strip the pole, then divide power series
    QPoly n = num_.shifted(x0);
    QPoly d = den_.shifted(x0);
    size_t vd = 0;
    while (vd < d.coeffs().size() && d.coeff(static_cast<long>(vd)) == 0) ++vd;
    std::vector<Rational> dc(d.coeffs().begin() + static_cast<long>(vd), d.coeffs().end());
    std::vector<Rational> nc = n.coeffs();
    nc.resize(std::max<size_t>(nc.size(), static_cast<size_t>(count) + dc.size()), Rational(0));
    std::vector<Rational> out(static_cast<size_t>(count), Rational(0));
    for (size_t k = 0; k < out.size(); ++k) {
        Rational acc = k < nc.size() ? nc[k] : Rational(0);
        for (size_t i = 1; i < dc.size() && i <= k; ++i) acc -= dc[i] * out[k - i];
        out[k] = acc / dc[0];
    }
    return out;   // coefficients of (x-x0)^(k - pole_order)
}

} // namespace mldelab
