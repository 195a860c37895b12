#include "mldelab/mlde.hpp"

#include <algorithm>
#include <set>

#include "mldelab/errors.hpp"
#include "mldelab/standard_series.hpp"

namespace mldelab {

MLDE3 mlde_from_ch(const Rational& c, const Rational& h) {
    MLDE3 m;
    m.P = -(h * h - h / 2 - c * h / 8 + c * c / 192 + c / 24);
    m.Q = (c / 24) * (c / 12 + Rational(1, 2) - h) * (h - c / 24);
    m.provenance = "from_ch(" + rat_str(c) + "," + rat_str(h) + ")";
    m.ch = std::make_pair(c, h);
    return m;
}

MLDE3 mlde_from_dn(long n) {
    if (n < 4) throw DomainError("D_n lattice equation needs n >= 4");
    MLDE3 m;
    Rational nr(n);
    m.P = (nr / 48) * (1 - nr / 4);
    m.Q = (nr / 24) * (nr / 24) * (1 - nr / 12);
    m.provenance = "from_dn(" + std::to_string(n) + ")";
    m.ch = std::make_pair(nr, Rational(1, 2));
    return m;
}

MLDE3 mlde_from_serre(const Rational& x, const Rational& y) {
    // d^3 at weight 0 expands to theta^3 - E2/2 theta^2 + (E2'/2 + E4/18) theta
    MLDE3 m;
    m.P = x + Rational(1, 18);
    m.Q = y;
    m.provenance = "from_serre";
    return m;
}

MLDE3 mlde_from_appendix(const Rational& x, const Rational& y) {
    MLDE3 m;
    m.P = x;
    m.Q = y;
    m.provenance = "from_appendix";
    return m;
}

MLDE3 mlde_from_eq1(const Rational& x, const Rational& y) {
    MLDE3 m;
    m.P = -x;
    m.Q = y;
    m.provenance = "from_eq1";
    return m;
}

Rational indicial_poly(const MLDE3& m, const Rational& t) {
    return t * t * t - t * t / 2 + m.P * t + m.Q;
}

std::vector<long> IndicialData::resonance_steps(int root_index) const {
    std::vector<long> steps;
    for (const auto& r : resonances)
        if (r.from == root_index) steps.push_back(r.step);
    std::sort(steps.begin(), steps.end());
    return steps;
}

namespace {

// Exact sign of the cubic at a rational point.
int cubic_sign(const MLDE3& m, const Rational& t) {
    return sgn(indicial_poly(m, t));
}

// Exact-sign bisection on an interval with a sign change, then snap to the
// nearest rational with denominator dividing D and verify.
std::optional<Rational> bisect_root(const MLDE3& m, Rational lo, Rational hi, const Integer& D) {
    int slo = cubic_sign(m, lo);
    int shi = cubic_sign(m, hi);
    if (slo == 0) return lo;
    if (shi == 0) return hi;
    if (slo == shi) return std::nullopt;
    for (int it = 0; it < 160; ++it) {
        Rational mid = (lo + hi) / 2;
        int sm = cubic_sign(m, mid);
        if (sm == 0) return mid;
        if (sm == slo) lo = mid; else hi = mid;
        // snap as soon as the interval pins a unique multiple of 1/D
        Rational width = hi - lo;
        if (width * D < 1) {
            Rational scaled = lo * D;
            Integer lo_num = ceil_rat(scaled);
            Rational cand(lo_num, D);
            cand.canonicalize();
            if (cand > lo && cand < hi && indicial_poly(m, cand) == 0) return cand;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// Number of sign agreements lost across the Sturm chain between a and b.
long sturm_count(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
    auto variations = [&chain](const Rational& x) {
        long v = 0;
        int prev = 0;
        for (const auto& p : chain) {
            int s = p.is_zero() ? 0 : sgn(p(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    return variations(a) - variations(b);
}

std::vector<Rational> rational_roots_of_cubic(const MLDE3& m) {
    // square-free split handles multiple roots exactly
    QPoly f(std::vector<Rational>{m.Q, m.P, Rational(-1, 2), Rational(1)});
    QPoly g = QPoly::gcd(f, f.derivative());
    std::vector<Rational> roots;
    if (g.degree() == 1) {
        // double (or, with the quotient, triple) root
        Rational r = -g.coeff(0) / g.coeff(1);
        QPoly lin(std::vector<Rational>{-r, Rational(1)});
        QPoly rest = f.divided_by(lin).divided_by(lin);
        roots.push_back(r);
        roots.push_back(r);
        if (rest.degree() == 1) {
            roots.push_back(-rest.coeff(0) / rest.coeff(1));
            return roots;
        }
        roots.push_back(r);   // triple
        return roots;
    }
    if (g.degree() == 2) {
        // triple root: f = (t - r)^3
        Rational r = Rational(1, 6);   // -B/3A with B = -1/2
        if (indicial_poly(m, r) == 0 && g(r) == 0) return {r, r, r};
        return {};
    }
    // square-free: isolate with a Sturm chain, then exact bisection
    std::vector<QPoly> chain{f, f.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() >= 1) {
        QPoly q, r;
        QPoly::divmod(chain[chain.size() - 2], chain.back(), q, r);
        chain.push_back(-r);
    }
    Rational absP = abs(m.P), absQ = abs(m.Q);
    Rational M = Rational(1) + std::max(std::max(absP, absQ), Rational(1, 2));
    Integer D = lcm(lcm(Integer(2), m.P.get_den()), m.Q.get_den());

    std::vector<std::pair<Rational, Rational>> intervals{{-M, M}};
    std::vector<std::pair<Rational, Rational>> isolated;
    while (!intervals.empty()) {
        auto [a, b] = intervals.back();
        intervals.pop_back();
        if (indicial_poly(m, a) == 0) { roots.push_back(a); continue; }
        long count = sturm_count(chain, a, b);
        if (count <= 0) continue;
        if (count == 1) { isolated.emplace_back(a, b); continue; }
        Rational mid = (a + b) / 2;
        intervals.emplace_back(a, mid);
        intervals.emplace_back(mid, b);
    }
    for (auto& [a, b] : isolated) {
        auto r = bisect_root(m, a, b, D);
        if (r) roots.push_back(*r);
    }
    return roots;
}

} // namespace

IndicialData indicial(const MLDE3& m) {
    IndicialData data;
    std::vector<Rational> roots;
    if (m.ch) {
        const auto& [c, h] = *m.ch;
        roots = {-c / 24, h - c / 24, c / 12 + Rational(1, 2) - h};
    } else {
        roots = rational_roots_of_cubic(m);
    }
    if (roots.size() != 3) {
        data.rational = false;
        return data;
    }
    for (const auto& r : roots)
        if (indicial_poly(m, r) != 0)
            throw Error("internal: indicial root verification failed");
    std::sort(roots.begin(), roots.end());
    data.rational = true;
    for (int i = 0; i < 3; ++i) data.roots[static_cast<size_t>(i)] = roots[static_cast<size_t>(i)];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            Rational d = data.roots[static_cast<size_t>(j)] - data.roots[static_cast<size_t>(i)];
            if (is_integer(d) && sgn(d) > 0)
                data.resonances.push_back({i, j, to_long(d.get_num())});
        }
    return data;
}

namespace {

struct OperatorSeries {
    QSeries a2;   // coefficient of theta^2: -E2/2
    QSeries a1;   // coefficient of theta:   E2'/2 + P E4
    QSeries a0;   // coefficient of 1:       Q E6
};

OperatorSeries operator_series(const MLDE3& m, long depth) {
    OperatorSeries op;
    QSeries e2 = eisenstein(2, depth);
    op.a2 = e2.scaled(Rational(-1, 2));
    op.a1 = e2.derived().scaled(Rational(1, 2)) + eisenstein(4, depth).scaled(m.P);
    op.a0 = eisenstein(6, depth).scaled(m.Q);
    return op;
}

// M = dL/dtheta = 3 theta^2 + 2 A2 theta + A1, the log-companion operator.
QSeries log_companion_apply(const OperatorSeries& op, const QSeries& p) {
    QSeries t1 = p.derived();
    QSeries t2 = t1.derived();
    return t2.scaled(3) + op.a2.scaled(2) * t1 + op.a1 * p;
}

// Coefficients of the vacuum-root Frobenius solution of the (c, h)-family at
// fixed c, as exact rational functions of h. Used for the canonical gauge
// and by printed_recursion (vacuum branch).
std::vector<RatFun> symbolic_vacuum_family(const Rational& c, long terms) {
    RatFun h = RatFun::variable();
    RatFun P = -(h * h - h / 2 - RatFun(c / 8) * h + RatFun(c * c / 192 + c / 24));
    RatFun Q = RatFun(c / 24) * (RatFun(c / 12 + Rational(1, 2)) - h) * (h - RatFun(c / 24));
    RatFun lambda(-c / 24);
    std::vector<RatFun> a(static_cast<size_t>(terms));
    a[0] = RatFun(1);
    for (long n = 1; n < terms; ++n) {
        RatFun rhs(0);
        for (long i = 1; i <= n; ++i) {
            RatFun t = lambda + RatFun(n - i);
            RatFun s2 = RatFun(Rational(12 * divisor_sigma(1, i)));
            RatFun s1 = RatFun(Rational(-12 * i * divisor_sigma(1, i))) +
                        RatFun(Rational(240 * divisor_sigma(3, i))) * P;
            RatFun s0 = RatFun(Rational(-504 * divisor_sigma(5, i))) * Q;
            rhs = rhs - (s2 * t * t + s1 * t + s0) * a[static_cast<size_t>(n - i)];
        }
        RatFun t = lambda + RatFun(n);
        RatFun phi = t * t * t - t * t / RatFun(2) + P * t + Q;
        a[static_cast<size_t>(n)] = rhs / phi;
    }
    return a;
}

// The h value pairing the equation with vacuum root -c/24 = `root`, if the
// family passes through it rationally.
std::optional<Rational> family_h(const MLDE3& m, const Rational& root) {
    Rational c = -24 * root;
    // P = -(h^2 - (1/2 + c/8) h + c^2/192 + c/24)
    Rational b = Rational(1, 2) + c / 8;
    Rational k = c * c / 192 + c / 24 + m.P;
    Rational disc = b * b - 4 * k;
    auto s = exact_sqrt(disc);
    if (!s) return std::nullopt;
    for (int branch = 0; branch < 2; ++branch) {
        Rational h = (b + (branch == 0 ? *s : -*s)) / 2;
        MLDE3 probe = mlde_from_ch(c, h);
        if (probe.P == m.P && probe.Q == m.Q) return h;
    }
    return std::nullopt;
}

std::optional<std::vector<Rational>> canonical_family_values(const MLDE3& m, const Rational& root,
                                                             long terms) {
    auto h0 = family_h(m, root);
    if (!h0) return std::nullopt;
    Rational c = -24 * root;
    auto sym = symbolic_vacuum_family(c, terms);
    std::vector<Rational> out;
    out.reserve(sym.size());
    for (const auto& f : sym) {
        if (f.has_pole_at(*h0)) return std::nullopt;
        out.push_back(f(*h0));
    }
    return out;
}

// One term of a log-polynomial series: a + b log q + c (log q)^2.
struct LogParts {
    QSeries a, b, c;
};

// integral of (A + B log q) dq/q with all integration constants zero:
// q^e dq/q -> q^e/e, the q^0 slot -> log q; (log q) q^e dq/q ->
// q^e (log q / e - 1/e^2), the q^0 slot -> (log q)^2/2.
LogParts integrate_log(const QSeries& A, const QSeries& B) {
    LogParts out;
    LogIntegral ia = integrate_dlog(A);
    out.a = ia.series;
    Rational log2_half(0);
    QSeries blin = QSeries::zero(1, 2), bplain = QSeries::zero(1, 2);
    if (!B.is_zero()) {
        std::vector<Rational> lin(B.coeffs()), plain(B.coeffs());
        for (size_t i = 0; i < lin.size(); ++i) {
            Rational e = rat(B.lead() + static_cast<long>(i), B.ram());
            if (e == 0) {
                log2_half = lin[i] / 2;
                lin[i] = 0;
                plain[i] = 0;
            } else {
                lin[i] /= e;
                plain[i] = -plain[i] / (e * e);
            }
        }
        blin = QSeries::from_coeffs(B.ram(), B.lead(), std::move(lin), B.trunc());
        bplain = QSeries::from_coeffs(B.ram(), B.lead(), std::move(plain), B.trunc());
        out.a = out.a + bplain;
    }
    out.b = blin;
    if (ia.log_coefficient != 0) {
        long span = std::max<long>(2, to_long(ceil_rat(ia.series.trunc_exponent())) + 1);
        out.b = out.b + QSeries::constant(ia.log_coefficient, span);
    }
    out.c = log2_half == 0 ? QSeries::zero(1, 2)
                           : QSeries::constant(log2_half, 2);
    return out;
}

// The printed logarithmic solutions are normalized by reduction of order
// based at the spectator root (the indicial root not involved in the
// resonance), all integration constants zero:
//
//   u3 = u1 * I[ theta(u2/u1) * I( eta^12 / (u1^3 theta(u2/u1)^2) ) ],
//
// with u1 the spectator solution, u2 the resonance partner and I the
// q-logarithmic antiderivative above. The value of the free coefficient of
// the plain part at the resonant slot, after normalizing the leading
// coefficient to 1, is the paper's gauge; it reproduces every coefficient
// of the printed displays at (16,-1) and (16,3/4).
std::optional<Rational> vop_log_free_value(const MLDE3& m, const Rational& root, long step,
                                           const QSeries& partner, FreeCoeffGauge gauge,
                                           long terms);

} // namespace

FrobeniusSolution frobenius_solve(const MLDE3& m, const Rational& root, long terms,
                                  FreeCoeffGauge gauge) {
    if (indicial_poly(m, root) != 0)
        throw NotAnIndicialRootError(rat_str(root) + " is not an indicial root");
    if (terms < 1) throw DomainError("frobenius_solve needs at least one term");

    long depth = terms + 1;
    OperatorSeries op = operator_series(m, depth);
    std::vector<Rational> s2(static_cast<size_t>(depth)), s1(static_cast<size_t>(depth)),
        s0(static_cast<size_t>(depth));
    for (long i = 0; i < depth; ++i) {
        s2[static_cast<size_t>(i)] = op.a2.coeff(Rational(i));
        s1[static_cast<size_t>(i)] = op.a1.coeff(Rational(i));
        s0[static_cast<size_t>(i)] = op.a0.coeff(Rational(i));
    }

    std::optional<std::vector<Rational>> canonical;
    auto free_value = [&](long step) -> Rational {
        if (gauge == FreeCoeffGauge::canonical) {
            if (!canonical) canonical = canonical_family_values(m, root, terms);
            if (canonical) return (*canonical)[static_cast<size_t>(step)];
        }
        return Rational(0);
    };

    FrobeniusSolution sol;
    sol.root = root;
    std::vector<Rational> a(static_cast<size_t>(terms), Rational(0));
    a[0] = 1;

    bool log_mode = false;
    QSeries partner_series;             // leading coefficient 1
    std::vector<Rational> mp;           // [M(p)] at exponents root + n

    for (long n = 1; n < terms; ++n) {
        Rational rhs(0);
        for (long i = 1; i <= n; ++i) {
            const Rational& prev = a[static_cast<size_t>(n - i)];
            if (prev == 0) continue;
            Rational t = root + (n - i);
            rhs -= (s2[static_cast<size_t>(i)] * t * t + s1[static_cast<size_t>(i)] * t +
                    s0[static_cast<size_t>(i)]) *
                   prev;
        }
        if (log_mode) rhs -= sol.log_coefficient * mp[static_cast<size_t>(n)];
        Rational phi = indicial_poly(m, root + n);
        if (phi != 0) {
            a[static_cast<size_t>(n)] = rhs / phi;
            continue;
        }
        if (rhs == 0) {
            Rational v = free_value(n);
            a[static_cast<size_t>(n)] = v;
            sol.free_steps.push_back(n);
            sol.free_values.push_back(v);
            if (sol.status == SolutionStatus::generic) sol.status = SolutionStatus::resonant_free;
            continue;
        }
        // nonzero obstruction: logarithmic solution g + C (log q) p
        if (log_mode)
            throw Error("second logarithmic resonance not supported");
        FrobeniusSolution partner = frobenius_solve(m, root + n, terms - n, gauge);
        if (!partner.series.is_plain())
            throw Error("logarithmic partner is itself logarithmic; not supported");
        partner_series = partner.series.plain();
        QSeries mseries = log_companion_apply(op, partner_series);
        mp.assign(static_cast<size_t>(terms), Rational(0));
        for (long k = n; k < terms; ++k)
            mp[static_cast<size_t>(k)] = mseries.coeff(root + k);
        if (mp[static_cast<size_t>(n)] == 0)
            throw Error("vanishing log companion at the resonant step");
        sol.log_coefficient = rhs / mp[static_cast<size_t>(n)];
        sol.status = SolutionStatus::logarithmic;
        log_mode = true;
        Rational v(0);
        if (gauge == FreeCoeffGauge::canonical) {
            auto vv = vop_log_free_value(m, root, n, partner_series, gauge, terms);
            if (vv) v = *vv;
        }
        a[static_cast<size_t>(n)] = v;
        sol.free_steps.push_back(n);
        sol.free_values.push_back(v);
    }

    QSeries g = QSeries::from_coeffs(1, 0, std::move(a), terms).shifted(root);
    if (log_mode)
        sol.series = LogQSeries(std::move(g), partner_series.scaled(sol.log_coefficient));
    else
        sol.series = LogQSeries(std::move(g));
    return sol;
}

namespace {

std::optional<Rational> vop_log_free_value(const MLDE3& m, const Rational& root, long step,
                                           const QSeries& partner, FreeCoeffGauge gauge,
                                           long terms) {
    IndicialData d = indicial(m);
    if (!d.rational) return std::nullopt;
    Rational partner_root = root + step;
    std::optional<Rational> spectator;
    for (const auto& r : d.roots)
        if (r != root && r != partner_root) spectator = r;
    if (!spectator) return std::nullopt;

    Rational spread = abs(*spectator) * 3 + abs(partner_root - *spectator) * 2 + abs(root) + 10;
    long depth = terms + to_long(ceil_rat(spread));
    QSeries u1, u2;
    try {
        u1 = frobenius_solve(m, *spectator, depth, gauge).series.plain();
        u2 = partner.trunc_exponent() >= partner_root + (terms - step)
                 ? partner
                 : frobenius_solve(m, partner_root, depth, gauge).series.plain();
    } catch (const Error&) {
        return std::nullopt;
    }

    QSeries eta12 = eta_power(12, depth);
    QSeries w1 = (u2 * u1.inverted()).derived();
    if (w1.is_zero()) return std::nullopt;
    QSeries inner_integrand = eta12 * u1.pow(Rational(3)).inverted() * (w1 * w1).inverted();
    LogIntegral inner = integrate_dlog(inner_integrand);
    QSeries w2a = w1 * inner.series;
    QSeries w2b =
        inner.log_coefficient == 0 ? QSeries::zero(1, 2) : w1.scaled(inner.log_coefficient);
    LogParts v = integrate_log(w2a, w2b);
    QSeries plain = u1 * v.a;
    if (!v.c.is_zero() && !(u1 * v.c).is_zero()) return std::nullopt;   // unexpected log^2
    Rational lead = plain.coeff(root);
    if (lead == 0) return std::nullopt;
    // sanity: nothing below the target root in the plain part
    if (plain.lead_exponent() < root) return std::nullopt;
    return plain.coeff(root + step) / lead;
}

} // namespace

std::vector<Rational> printed_recursion(const Rational& c, const Rational& h,
                                        const Rational& root, long terms) {
    // identify the root against the three family exponents; h stays symbolic
    RatFun t = RatFun::variable();
    RatFun lambda;
    if (root == -c / 24)
        lambda = RatFun(-c / 24);
    else if (root == h - c / 24)
        lambda = t - RatFun(c / 24);
    else if (root == c / 12 + Rational(1, 2) - h)
        lambda = RatFun(c / 12 + Rational(1, 2)) - t;
    else
        throw NotAnIndicialRootError(rat_str(root) + " is not an index of the (c,h) family");

    // sigma-coefficient polynomials as the paper prints them
    RatFun c43 = RatFun(Rational(5, 4)) *
                 (RatFun(c * c + 8 * c) - RatFun(24 * c + 96) * t + RatFun(192) * t * t);
    RatFun c5 = RatFun(Rational(7, 96) * c) * (RatFun(c) - RatFun(24) * t) *
                (RatFun(c + 6) - RatFun(12) * t);

    std::vector<RatFun> a(static_cast<size_t>(terms));
    a[0] = RatFun(1);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(terms));
    out.push_back(Rational(1));
    for (long n = 1; n < terms; ++n) {
        RatFun rhs(0);
        for (long i = 1; i <= n; ++i) {
            RatFun pos = lambda + RatFun(n - i);                      // lambda - i + n
            RatFun sig1 = RatFun(Rational(12 * divisor_sigma(1, i))) *
                          (RatFun(2 * i) - lambda - RatFun(n));        // 12(2i - lambda - n) sigma1
            RatFun sig3 = RatFun(Rational(divisor_sigma(3, i))) * c43;
            RatFun sig5 = RatFun(Rational(divisor_sigma(5, i))) * c5;
            rhs = rhs + (pos * (sig1 + sig3) - sig5) * a[static_cast<size_t>(n - i)];
        }
        RatFun lhs = (RatFun(n) + lambda + RatFun(c / 24)) *
                     (RatFun(n) + lambda + RatFun(c / 24) - t) *
                     (RatFun(n) + lambda - RatFun(c / 12) - RatFun(Rational(1, 2)) + t);
        a[static_cast<size_t>(n)] = rhs / lhs;
        if (a[static_cast<size_t>(n)].has_pole_at(h))
            throw ResonantStepError(n, "denominator vanishes at step " + std::to_string(n) +
                                           " without cancellation");
        out.push_back(a[static_cast<size_t>(n)](h));
    }
    return out;
}

QSeries mlde_apply(const MLDE3& m, const QSeries& f) {
    if (f.is_zero()) return f;
    Rational span = f.trunc_exponent() - std::min(f.lead_exponent(), Rational(0));
    long depth = to_long(ceil_rat(span)) + 2;
    OperatorSeries op = operator_series(m, depth);
    QSeries f1 = f.derived();
    QSeries f2 = f1.derived();
    QSeries f3 = f2.derived();
    return f3 + op.a2 * f2 + op.a1 * f1 + op.a0 * f;
}

LogQSeries mlde_apply(const MLDE3& m, const LogQSeries& f) {
    if (f.parts.empty()) return f;
    if (f.parts.size() > 3) throw DomainError("log degree above 2 not supported");
    Rational span(0);
    for (const auto& p : f.parts)
        if (!p.is_zero()) {
            Rational s = p.trunc_exponent() - std::min(p.lead_exponent(), Rational(0));
            span = std::max(span, s);
        }
    long depth = to_long(ceil_rat(span)) + 2;
    OperatorSeries op = operator_series(m, depth);

    auto L = [&](const QSeries& u) {
        QSeries u1 = u.derived();
        QSeries u2 = u1.derived();
        return u2.derived() + op.a2 * u2 + op.a1 * u1 + op.a0 * u;
    };
    auto M = [&](const QSeries& u) { return log_companion_apply(op, u); };
    auto N = [&](const QSeries& u) { return u.derived().scaled(6) + op.a2.scaled(2) * u; };

    LogQSeries out;
    out.parts.resize(f.parts.size());
    for (size_t k = 0; k < f.parts.size(); ++k) {
        QSeries r = L(f.parts[k]);
        if (k + 1 < f.parts.size()) r = r + M(f.parts[k + 1]).scaled(Rational(static_cast<long>(k) + 1));
        if (k + 2 < f.parts.size()) r = r + N(f.parts[k + 2]);
        out.parts[k] = r;
    }
    return out;
}

bool mlde_annihilates(const MLDE3& m, const QSeries& f) {
    return mlde_apply(m, f).is_zero();
}

bool mlde_annihilates(const MLDE3& m, const LogQSeries& f) {
    LogQSeries r = mlde_apply(m, f);
    for (const auto& p : r.parts)
        if (!p.is_zero()) return false;
    return true;
}

QSeries serre_derivative_k(const QSeries& f, const Rational& k) {
    if (f.is_zero()) return f;
    Rational span = f.trunc_exponent() - std::min(f.lead_exponent(), Rational(0));
    long depth = to_long(ceil_rat(span)) + 2;
    return f.derived() - eisenstein(2, depth).scaled(k / 12) * f;
}

QSeries dform_apply(const Rational& k, const Rational& alpha, const QSeries& f) {
    if (f.is_zero()) return f;
    Rational span = f.trunc_exponent() - std::min(f.lead_exponent(), Rational(0));
    long depth = to_long(ceil_rat(span)) + 2;
    QSeries d1 = serre_derivative_k(f, k);
    QSeries d2 = serre_derivative_k(d1, k + 2);
    QSeries d3 = serre_derivative_k(d2, k + 4);
    Rational e6_coeff = k * (k + 2) * (k + 4) / 1728 + k * alpha / 12;
    return d3 + eisenstein(4, depth).scaled(alpha) * d1 + eisenstein(6, depth).scaled(e6_coeff) * f;
}

QSeries kaneko_zagier_residual(const QSeries& f) {
    if (f.is_zero()) return f;
    Rational span = f.trunc_exponent() - std::min(f.lead_exponent(), Rational(0));
    long depth = to_long(ceil_rat(span)) + 2;
    QSeries f1 = f.derived();
    return f1.derived() - eisenstein(2, depth).scaled(Rational(1, 6)) * f1 -
           eisenstein(4, depth).scaled(Rational(1, 18)) * f;
}

} // namespace mldelab
