#include "doctest.h"

#include <random>
#include <set>

#include "mldelab/errors.hpp"
#include "mldelab/mlde.hpp"
#include "mldelab/symmetry.hpp"
#include "test_helpers.hpp"

using namespace mldelab;

namespace {

CHPair random_pair(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return CHPair{rat(num(rng), den(rng)), rat(num(rng), den(rng))};
}

} // namespace

TEST_CASE("mu is an involution, lambda has order 3") {
    std::mt19937 rng(3);
    for (int t = 0; t < 25; ++t) {
        CHPair p = random_pair(rng);
        CHECK(sym_mu(sym_mu(p)) == p);
        CHECK(sym_lambda(sym_lambda(sym_lambda(p))) == p);
    }
    CHPair p{16, 2};
    CHECK(sym_mu(sym_mu(p)) == p);
}

TEST_CASE("lambda on (16,3) moves the central charge to -56") {
    CHPair q = sym_lambda(CHPair{16, 3});
    CHECK(q.c == -56);
    CHECK(q.h == Rational(-7, 2));
}

TEST_CASE("the six maps generated by lambda and mu form S3") {
    // count distinct maps by their action on a generic sample
    std::vector<CHPair> sample{{Rational(7, 3), Rational(2, 5)}, {5, -2}, {Rational(-1, 4), 3}};
    using Image = std::vector<std::pair<std::string, std::string>>;
    auto image = [&sample](auto&& f) {
        Image im;
        for (const auto& p : sample) {
            CHPair q = f(p);
            im.emplace_back(rat_str(q.c), rat_str(q.h));
        }
        return im;
    };
    std::set<Image> maps;
    auto l = [](const CHPair& p) { return sym_lambda(p); };
    auto m = [](const CHPair& p) { return sym_mu(p); };
    maps.insert(image([](const CHPair& p) { return p; }));
    maps.insert(image(l));
    maps.insert(image([&](const CHPair& p) { return sym_lambda(sym_lambda(p)); }));
    maps.insert(image(m));
    maps.insert(image([&](const CHPair& p) { return sym_mu(sym_lambda(p)); }));
    maps.insert(image([&](const CHPair& p) { return sym_mu(sym_lambda(sym_lambda(p))); }));
    CHECK(maps.size() == 6);
    // composing further stays inside
    maps.insert(image([&](const CHPair& p) { return sym_lambda(sym_mu(p)); }));
    maps.insert(image([&](const CHPair& p) { return sym_lambda(sym_lambda(sym_mu(p))); }));
    CHECK(maps.size() == 6);
}

TEST_CASE("indicial roots are invariant under lambda and mu") {
    std::mt19937 rng(17);
    for (int t = 0; t < 15; ++t) {
        CHPair p = random_pair(rng);
        IndicialData d0 = indicial(mlde_from_ch(p.c, p.h));
        for (const CHPair& q : {sym_lambda(p), sym_mu(p), sym_mu(sym_lambda(p))}) {
            IndicialData d1 = indicial(mlde_from_ch(q.c, q.h));
            CHECK(d0.roots == d1.roots);
        }
    }
}

TEST_CASE("weight table rows") {
    WeightTable t = weight_table(CHPair{8, Rational(1, 2)});
    CHECK(t.rows[0].central_charge == 8);
    CHECK(t.rows[0].weights == std::array<Rational, 3>{Rational(0), Rational(1, 2), Rational(1)});

    WeightTable t16 = weight_table(CHPair{16, 3});
    CHECK(t16.rows[2].central_charge == 28);
    std::multiset<Rational> w(t16.rows[2].weights.begin(), t16.rows[2].weights.end());
    CHECK(w == std::multiset<Rational>{Rational(0), Rational(1, 2), Rational(7, 2)});

    WeightTable t0 = weight_table(CHPair{Rational(11, 3), 0});
    CHECK(t0.rows[1].central_charge == t0.rows[0].central_charge);
}

TEST_CASE("weight table rows share one index multiset") {
    std::mt19937 rng(23);
    for (int t = 0; t < 10; ++t) {
        CHPair p = random_pair(rng);
        WeightTable w = weight_table(p);
        std::multiset<Rational> base;
        for (const auto& row : w.rows) {
            std::multiset<Rational> idx;
            for (const auto& h : row.weights) idx.insert(h - row.central_charge / 24);
            if (base.empty()) base = idx;
            CHECK(base == idx);
        }
    }
}

TEST_CASE("second coefficient m at the printed points") {
    CHECK(second_coeff_m(CHPair{16, 2}) == 496);
    CHECK(second_coeff_m(CHPair{16, 3}) == 496);   // h-independent at c = 16
    CHECK(second_coeff_m(CHPair{20, Rational(1, 2)}) == 780);
    CHECK(second_coeff_m(CHPair{28, Rational(1, 2)}) == 1540);
    CHECK_THROWS_AS(second_coeff_m(CHPair{5, 1}), DegenerateDenominatorError);
    CHECK_THROWS_AS(second_coeff_m(CHPair{12, 1}), DegenerateDenominatorError);
}

TEST_CASE("m agrees with the solver a1 away from c = 8, 16") {
    for (auto [c, h] : {std::pair<Rational, Rational>{20, Rational(1, 5)},
                        {Rational(25, 2), Rational(2, 7)},
                        {28, Rational(1, 2)}}) {
        Rational m = second_coeff_m(CHPair{c, h});
        MLDE3 eq = mlde_from_ch(c, h);
        FrobeniusSolution s = frobenius_solve(eq, -c / 24, 3, FreeCoeffGauge::canonical);
        CHECK(s.series.plain().normalized().coeff(-c / 24 + 1) == m);
    }
}

TEST_CASE("h_from_cm solves the quadratic") {
    auto hs = h_from_cm(8, 120);
    REQUIRE(hs.size() == 2);
    CHECK(hs[0] == Rational(1, 2));
    CHECK(hs[1] == 1);

    // mu-stability: h1 + h2 = c/8 + 1/2
    auto hs20 = h_from_cm(20, 780);
    REQUIRE(hs20.size() == 2);
    CHECK(hs20[0] + hs20[1] == Rational(5, 2) + Rational(1, 2));
    CHECK((hs20[0] == Rational(1, 2) || hs20[1] == Rational(1, 2)));
}

TEST_CASE("h_from_cm roundtrip through second_coeff_m") {
    for (auto [c, h] : {std::pair<Rational, Rational>{20, Rational(1, 2)},
                        {28, Rational(1, 2)},
                        {24, 2}}) {
        Rational m = second_coeff_m(CHPair{c, h});
        auto hs = h_from_cm(c, m);
        bool found = false;
        for (const auto& v : hs) found = found || v == h;
        CHECK(found);
    }
}

TEST_CASE("h_from_cm degenerate and non-square branches") {
    // at (16, 2) the computed m equals 31c and the quadratic collapses:
    // every h solves it, reported as the degenerate branch
    Rational m16 = second_coeff_m(CHPair{16, 2});
    CHECK(m16 == 31 * Rational(16));
    CHECK_THROWS_AS(h_from_cm(16, m16), DegenerateError);
    CHECK_THROWS_AS(h_from_cm(8, 248), DegenerateError);
    CHECK_THROWS_AS(h_from_cm(20, 781), NotRationalSquareError);
}
