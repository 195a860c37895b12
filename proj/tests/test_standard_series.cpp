#include "doctest.h"

#include "mldelab/errors.hpp"
#include "mldelab/standard_series.hpp"
#include "test_helpers.hpp"

using namespace mldelab;
using mldelab::testing::printed_tail;
using mldelab::testing::rats;

TEST_CASE("divisor sums") {
    CHECK(divisor_sigma(1, 1) == 1);
    CHECK(divisor_sigma(3, 2) == 9);
    CHECK(divisor_sigma(5, 4) == 1057);
    CHECK_THROWS_AS(divisor_sigma(1, 0), DomainError);
}

TEST_CASE("Eisenstein normalizations") {
    QSeries e4 = eisenstein(4, 8);
    CHECK(e4.coeff(Rational(0)) == 1);
    CHECK(e4.coeff(Rational(1)) == 240);
    QSeries e2 = eisenstein(2, 8);
    CHECK(e2.coeff(Rational(1)) == -24);
    QSeries e6 = eisenstein(6, 8);
    CHECK(e6.coeff(Rational(1)) == -504);
}

TEST_CASE("Ramanujan identities to 30 terms") {
    long T = 31;
    QSeries e2 = eisenstein(2, T), e4 = eisenstein(4, T), e6 = eisenstein(6, T);
    CHECK((e2.derived().scaled(12) - (e2 * e2 - e4)).is_zero());
    CHECK((e4.derived().scaled(3) - (e2 * e4 - e6)).is_zero());
    CHECK((e6.derived().scaled(2) - (e2 * e6 - e4 * e4)).is_zero());
    QSeries eta = dedekind_eta(T);
    CHECK((eta.derived().scaled(24) - e2 * eta).is_zero());
}

TEST_CASE("eta follows the pentagonal pattern") {
    QSeries eta = dedekind_eta(31);
    CHECK(eta.lead_exponent() == Rational(1, 24));
    std::vector<Rational> tail = eta.integer_tail(13);
    CHECK(tail == rats({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
}

TEST_CASE("eta power leading exponents and discriminant identity") {
    QSeries eta8_inv = eta_power(-8, 20);
    CHECK(eta8_inv.lead_exponent() == Rational(-1, 3));
    CHECK(eta_power(-16, 20).lead_exponent() == Rational(-2, 3));
    long T = 31;
    QSeries lhs = eta_power(24, T).scaled(1728);
    QSeries e4 = eisenstein(4, T), e6 = eisenstein(6, T);
    QSeries rhs = e4.pow(Rational(3)) - e6.pow(Rational(2));
    CHECK(lhs == rhs);
}

TEST_CASE("theta constants") {
    QSeries t2 = jacobi_theta(2, 1, 12);
    CHECK(t2.lead_exponent() == Rational(1, 8));
    CHECK(t2.leading_coefficient() == 2);
    QSeries t3 = jacobi_theta(3, 1, 12);
    CHECK(t3.coeff(Rational(0)) == 1);
    CHECK(t3.coeff(Rational(1, 2)) == 2);
    CHECK(t3.coeff(Rational(2)) == 2);
    CHECK(t3.coeff(Rational(9, 2)) == 2);
    CHECK(t3.coeff(Rational(1)) == 0);
}

TEST_CASE("Jacobi identity theta3^4 = theta2^4 + theta0^4 to 50 slots") {
    long T = 51;
    QSeries r = jacobi_theta(3, 1, T).pow(Rational(4)) - jacobi_theta(0, 1, T).pow(Rational(4)) -
                jacobi_theta(2, 1, T).pow(Rational(4));
    CHECK(r.is_zero());
    CHECK(r.trunc_exponent() >= 50);
}

TEST_CASE("theta2 = 2 eta(q^2)^2 / eta") {
    long T = 40;
    QSeries lhs = jacobi_theta(2, 1, T);
    QSeries rhs = dedekind_eta(T / 2 + 2).dilated(2).pow(Rational(2)).scaled(2) *
                  dedekind_eta(T + 2).inverted();
    CHECK(lhs == rhs);
}

TEST_CASE("auxiliary series leading behavior") {
    CHECK(aux_series("I3", 10).coeff(Rational(0)) == 1);
    CHECK(aux_series("I3", 10).coeff(Rational(1)) == 6);
    CHECK(aux_series("Delta3", 10).lead_exponent() == Rational(1, 3));
    CHECK(aux_series("Delta2", 10).lead_exponent() == Rational(1, 2));
    CHECK(aux_series("Delta2A", 10).lead_exponent() == Rational(1));
    CHECK(aux_series("Delta3A", 10).lead_exponent() == Rational(1));
    CHECK(aux_series("psi1", 10).lead_exponent() == Rational(-1, 60));
    CHECK(aux_series("psi2", 10).lead_exponent() == Rational(11, 60));
    CHECK_THROWS_AS(aux_series("nope", 5), UnknownNameError);
}

TEST_CASE("I3^2/eta^4 matches the printed expansion") {
    long T = 12;
    QSeries s = aux_series("I3", T).pow(Rational(2)) * eta_power(-4, T);
    CHECK(s.lead_exponent() == Rational(-1, 6));
    CHECK(printed_tail(s, 5) == rats({1, 16, 98, 364, 1221}));
}

TEST_CASE("H2/eta^4 matches x(q)") {
    long T = 12;
    QSeries s = aux_series("H2", T) * eta_power(-4, T);
    CHECK(s.lead_exponent() == Rational(-1, 6));
    CHECK(printed_tail(s, 5) == rats({1, 28, 134, 568, 1809}));
}

TEST_CASE("Rogers-Ramanujan combination of Appendix case 2") {
    long T = 14;
    QSeries p1 = aux_series("psi1", T);
    QSeries p2 = aux_series("psi2", T);
    QSeries s = p1.pow(Rational(10)) + (p1.pow(Rational(5)) * p2.pow(Rational(5))).scaled(14) -
                p2.pow(Rational(10));
    CHECK(s.lead_exponent() == Rational(-1, 6));
    CHECK(printed_tail(s, 6) == rats({1, 24, 124, 500, 1625, 4752}));
}
