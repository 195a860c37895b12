#include "doctest.h"

#include "mldelab/errors.hpp"
#include "mldelab/hyper.hpp"
#include "mldelab/mlde.hpp"
#include "mldelab/standard_series.hpp"
#include "test_helpers.hpp"

using namespace mldelab;
using mldelab::testing::printed_tail;
using mldelab::testing::rats;

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(Rational(7, 3), 0) == 1);
    CHECK(pochhammer(1, 5) == 120);
    CHECK(pochhammer(Rational(1, 3), 2) == Rational(4, 9));
}

TEST_CASE("3F2 series basics") {
    HyperParams zero{{Rational(0), Rational(1, 2), Rational(3)}, {Rational(1), Rational(2)}};
    auto c = f32_series(zero, 5);
    CHECK(c == rats({1, 0, 0, 0, 0}));

    HyperParams ones{{1, 1, 1}, {1, 1}};
    CHECK(f32_series(ones, 5) == rats({1, 1, 1, 1, 1}));

    HyperParams gen{{Rational(2, 3), Rational(5), Rational(-1, 2)},
                    {Rational(7, 4), Rational(3)}};
    auto g = f32_series(gen, 2);
    CHECK(g[1] == Rational(2, 3) * 5 * Rational(-1, 2) / (Rational(7, 4) * 3));

    HyperParams bad{{1, 1, 1}, {Rational(-2), 1}};
    CHECK_THROWS_AS(f32_series(bad, 3), PoleInLowerParameterError);
}

TEST_CASE("j-function and kappa") {
    QSeries j = j_function(4);
    CHECK(j.lead_exponent() == Rational(-1));
    CHECK(j.coeff(Rational(0)) == 744);
    CHECK(j.coeff(Rational(1)) == 196884);
    QSeries K = kappa(5);
    CHECK(K.lead_exponent() == Rational(1));
    CHECK(K.leading_coefficient() == 1728);
    QSeries prod = j_function(6) * kappa(6);
    CHECK(prod == QSeries::constant(1728, 4));
}

TEST_CASE("hyper solution reproduces E4/eta^8 at c=8") {
    std::array<Rational, 3> r{Rational(-1, 3), Rational(1, 6), Rational(2, 3)};
    QSeries f1 = hyper_solution(r, 1, 6);
    CHECK(printed_tail(f1, 5) == rats({1, 248, 4124, 34752, 213126}));
}

TEST_CASE("h-independence of the first hyper solution at c=8 and 16") {
    for (long cc : {8L, 16L}) {
        Rational c(cc);
        QSeries reference;
        bool first = true;
        for (Rational h : {Rational(1, 5), Rational(2, 7), Rational(3, 11), Rational(4, 13),
                           Rational(5, 17)}) {
            std::array<Rational, 3> r{-c / 24, h - c / 24, c / 12 + Rational(1, 2) - h};
            QSeries f1 = hyper_solution(r, 1, 11);
            if (first) {
                reference = f1;
                first = false;
            } else {
                CHECK(f1 == reference);
            }
        }
        long T = 14;
        QSeries e4 = eisenstein(4, T);
        QSeries target = cc == 8 ? e4 * eta_power(-8, T) : e4 * e4 * eta_power(-16, T);
        CHECK(reference == target.truncated(reference.trunc_exponent()));
    }
}

TEST_CASE("the spec's sample triple gives E4^2/eta^16 for both h") {
    for (Rational h : {Rational(1, 5), Rational(2, 7)}) {
        std::array<Rational, 3> r{Rational(-2, 3), h - Rational(2, 3), Rational(7, 6) - h};
        QSeries f1 = hyper_solution(r, 1, 11);
        CHECK(printed_tail(f1, 5) == rats({1, 496, 69752, 2115008, 34670620}));
    }
}

TEST_CASE("second coefficient formula of the f1 display") {
    std::array<Rational, 3> r{Rational(-1, 4), Rational(1, 5), Rational(11, 20)};
    QSeries f1 = hyper_solution(r, 1, 4);
    Rational r1 = r[0], r2 = r[1], r3 = r[2];
    Rational expected = 1728 * r1 * (r1 + Rational(1, 3)) * (r1 + Rational(2, 3)) /
                            ((1 + r1 - r2) * (1 + r1 - r3)) -
                        744 * r1;
    CHECK(f1.normalized().coeff(r1 + 1) == expected);
}

TEST_CASE("generic hyper triple solves the matching MLDE") {
    // exponents summing to 1/2 with no integral differences
    for (auto [cn, cd, hn, hd] : {std::array<long, 4>{7, 2, 1, 5}, {9, 4, 2, 7}}) {
        Rational c = rat(cn, cd), h = rat(hn, hd);
        std::array<Rational, 3> r{-c / 24, h - c / 24, c / 12 + Rational(1, 2) - h};
        MLDE3 m = mlde_from_ch(c, h);
        for (int i = 1; i <= 3; ++i) {
            QSeries fi = hyper_solution(r, i, 9);
            CHECK(mlde_annihilates(m, fi));
        }
    }
}

TEST_CASE("resonant triples raise LowerParameterPole") {
    // 4/5 - (-1/5) = 1 and no terminating upper parameter
    std::array<Rational, 3> r{Rational(-1, 5), Rational(4, 5), Rational(-1, 10)};
    CHECK_THROWS_AS(hyper_solution(r, 1, 5), PoleInLowerParameterError);
}

TEST_CASE("hypergeometric expressions of x and y") {
    auto [rx, ry] = xy_hypergeometric_check(11);
    CHECK(rx.is_zero());
    CHECK(ry.is_zero());
    CHECK(rx.trunc_exponent() >= 10);
    CHECK(ry.trunc_exponent() >= 10);
}

TEST_CASE("composition orders agree") {
    // Horner composition vs direct term-by-term sum of c_r K^r
    HyperParams p{{Rational(1, 4), Rational(7, 12), Rational(11, 12)},
                  {Rational(4, 5), Rational(6, 5)}};
    long T = 9;
    QSeries K = kappa(T);
    auto z = f32_series(p, T);
    QSeries direct = QSeries::constant(z[0], T);
    QSeries power = QSeries::constant(1, T);
    for (size_t k = 1; k < z.size(); ++k) {
        power = power * K;
        direct = direct + power.scaled(z[k]);
    }
    // rebuild through hyper-style Horner
    QSeries horner = QSeries::constant(z.back(), T);
    for (size_t k = z.size() - 1; k-- > 0;) horner = horner * K + QSeries::constant(z[k], T);
    CHECK(horner == direct);
}
