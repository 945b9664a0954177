#include <doctest.h>
#include <mmf/minimal.hpp>

using namespace mmf;

TEST_CASE("central charges and conformal weights") {
    CHECK(central_charge(2, 5) == rat(-22, 5));
    CHECK(central_charge(2, 7) == rat(-68, 7));
    CHECK(central_charge(3, 4) == rat(1, 2));
    CHECK_THROWS(central_charge(2, 4));
    CHECK_THROWS(central_charge(1, 5));

    // Ising h-values
    CHECK(conformal_weight(3, 4, 1, 1) == 0);
    CHECK(conformal_weight(3, 4, 2, 1) == rat(1, 2));
    CHECK(conformal_weight(3, 4, 2, 2) == rat(1, 16));
    // Lee-Yang
    CHECK(conformal_weight(2, 5, 1, 1) == 0);
    CHECK(conformal_weight(2, 5, 1, 2) == rat(-1, 5));
    CHECK_THROWS(conformal_weight(2, 5, 2, 1));
}

TEST_CASE("effective central charge") {
    auto [hmin5, ceff5] = ceff_hmin(2, 5);
    CHECK(hmin5 == rat(-1, 5));
    CHECK(ceff5 == rat(2, 5));
    auto [hmin_p, ceff_p] = ceff_hmin(2, 15);
    CHECK(ceff_p == 1 - rat(3, 15));
}

TEST_CASE("n_p closed form equals the oracle") {
    CHECK(n_level_closed(5) == 60);
    CHECK(n_level_closed(7) == 42);
    for (long p = 5; p <= 101; p += 2) CHECK(n_level_closed(p) == n_level_oracle(2, p));
    CHECK_THROWS(n_level_closed(4));
    CHECK_THROWS(n_level_closed(3));
}

TEST_CASE("minimal_params aggregates consistently") {
    MinimalModelParams m = minimal_params(2, 5);
    CHECK(m.c == rat(-22, 5));
    CHECK(m.h_table.at({1, 2}) == rat(-1, 5));
    CHECK(m.c_eff == m.c - 24 * m.h_min);
    CHECK(m.n_level == 60);
}

TEST_CASE("character leading behavior") {
    // vacuum character of Lee-Yang: lead c_eff/(-24)... h - c/24 = 11/60
    QSeries ch = character(2, 5, 1, 1, 20);
    CHECK(ch.leading_exponent() == rat(11, 60));
    CHECK(coeff_at(ch, ch.leading_exponent()) == 1);
    // h_{1,1} module has no level-one state (L_{-1} vacuum is null)
    CHECK(coeff_at(ch, ch.leading_exponent() + 1) == 0);
    CHECK(coeff_at(ch, ch.leading_exponent() + 2) == 1);

    QSeries ch2 = character(2, 5, 1, 2, 20);
    CHECK(ch2.leading_exponent() == rat(-1, 60));
    CHECK(coeff_at(ch2, ch2.leading_exponent() + 1) == 1);
}

TEST_CASE("scaled character equals the theta quotient") {
    for (long p : {5, 7, 15}) {
        for (long s = 1; s <= (p - 1) / 2; ++s) {
            QSeries sc = scaled_character(p, s, 12);
            PhasedSeries ib = ibukiyama(p, p - 2 * s, 12);
            CHECK(eq_to_prec(sc, ib.series));
            CHECK(sc.leading_exponent() ==
                  conformal_weight(2, p, 1, s) - central_charge(2, p) / 24 + rat(p - 3, 24 * p));
        }
    }
}

TEST_CASE("connecting phase composes with the theta phase") {
    // e(alpha_s) is defined so that eta^{c_eff} ch = e(alpha) f_{p-2s};
    // the series sides already agree, so alpha must cancel the f_r phase.
    for (long p : {5, 7}) {
        for (long s = 1; s <= (p - 1) / 2; ++s) {
            Phase a = scaled_character_phase(p, s);
            Phase b = ibukiyama(p, p - 2 * s, 4).phase;
            CHECK((a * b).is_one());
        }
    }
}

TEST_CASE("ibukiyama argument validation") {
    CHECK_THROWS(ibukiyama(4, 1, 5));
    CHECK_THROWS(ibukiyama(7, 2, 5));
    CHECK_THROWS(ibukiyama(7, 9, 5));
}

TEST_CASE("identity checker enforces the precision floor") {
    const auto& ids = identities_5_15();
    REQUIRE(ids.size() == 3);
    CHECK_THROWS(verify_identity(ids[0].lhs, ids[0].rhs, 49));
    CHECK(verify_identity(ids[1].lhs, ids[1].rhs, 50));
}

TEST_CASE("a perturbed identity fails") {
    const auto& id = identities_5_15()[1]; // f1 f2 = g5
    CharExpr wrong = id.rhs;
    wrong.push_back({Rat(1), {CharFactor{15, 2, 1}}});
    CHECK(!verify_identity(id.lhs, wrong, 50));
}
