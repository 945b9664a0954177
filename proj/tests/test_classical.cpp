#include <doctest.h>
#include <mmf/classical.hpp>

using namespace mmf;

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == rat(-1, 2));
    CHECK(bernoulli(2) == rat(1, 6));
    CHECK(bernoulli(4) == rat(-1, 30));
    CHECK(bernoulli(12) == rat(-691, 2730));
    CHECK(bernoulli(3) == 0);
}

TEST_CASE("Eisenstein expansions") {
    QSeries e2 = eisenstein(2, 10);
    QSeries e4 = eisenstein(4, 10);
    QSeries e6 = eisenstein(6, 10);
    CHECK(coeff_at(e2, Rat(0)) == 1);
    CHECK(coeff_at(e2, Rat(1)) == -24);
    CHECK(coeff_at(e4, Rat(1)) == 240);
    CHECK(coeff_at(e4, Rat(2)) == 2160);
    CHECK(coeff_at(e6, Rat(1)) == -504);
    CHECK(coeff_at(e6, Rat(3)) == -122976);
}

TEST_CASE("Ramanujan derivative identities") {
    long prec = 40;
    QSeries e2 = eisenstein(2, prec);
    QSeries e4 = eisenstein(4, prec);
    QSeries e6 = eisenstein(6, prec);
    CHECK(eq_to_prec(q_derivative(e2), scale(sub(mul(e2, e2), e4), rat(1, 12))));
    CHECK(eq_to_prec(q_derivative(e4), scale(sub(mul(e2, e4), e6), rat(1, 3))));
    CHECK(eq_to_prec(q_derivative(e6), scale(sub(mul(e2, e6), mul(e4, e4)), rat(1, 2))));
}

TEST_CASE("eta pentagonal expansion") {
    QSeries h = eta(30);
    CHECK(h.lattice_den() == 24);
    CHECK(h.leading_exponent() == rat(1, 24));
    // eta = q^{1/24} (1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + q^22 + ...)
    std::map<long, long> expect = {{0, 1},  {1, -1}, {2, -1}, {5, 1},
                                   {7, 1},  {12, -1}, {15, -1}, {22, 1}};
    for (long n = 0; n < 26; ++n) {
        long want = expect.count(n) ? expect[n] : 0;
        CHECK(coeff_at(h, rat(1, 24) + n) == want);
    }
}

TEST_CASE("eta powers multiply back") {
    QSeries h = eta(20);
    CHECK(eq_to_prec(mul(mul(h, h), recip(h)), h));
    QSeries third = eta_pow(rat(1, 3), 20);
    CHECK(eq_to_prec(mul(mul(third, third), third), h));
    CHECK(eta_pow(rat(-3, 5), 20).leading_exponent() == rat(-3, 120));
}

TEST_CASE("eta^24 is the discriminant") {
    long prec = 40;
    QSeries delta = eta_pow(Rat(24), prec);
    QSeries e4 = eisenstein(4, prec);
    QSeries e6 = eisenstein(6, prec);
    QSeries rhs = scale(sub(pow_int(e4, 3), mul(e6, e6)), rat(1, 1728));
    CHECK(eq_to_prec(delta, rhs));
    CHECK(coeff_at(delta, Rat(1)) == 1);
    CHECK(coeff_at(delta, Rat(2)) == -24);
}

TEST_CASE("theta_ab symmetry and exponents") {
    QSeries t1 = theta_ab(Rat(35), Rat(9), 12);
    QSeries t2 = theta_ab(Rat(35), Rat(-9), 12);
    CHECK(eq_to_prec(t1, t2));
    CHECK(t1.leading_exponent() == rat(81, 140));
    CHECK_THROWS(theta_ab(Rat(0), Rat(1), 5));
}

TEST_CASE("theta_constant separability") {
    PhasedSeries tc = theta_constant(rat(1, 10), rat(1, 2), 5, 10);
    CHECK(tc.phase == Phase::e(rat(1, 20)));
    CHECK(tc.series.leading_exponent() == rat(1, 40));
    CHECK_THROWS(theta_constant(rat(1, 10), rat(1, 3), 5, 10));
}

TEST_CASE("level-one dimensions and monomial bases") {
    CHECK(mform_dim(0) == 1);
    CHECK(mform_dim(2) == 0);
    CHECK(mform_dim(4) == 1);
    CHECK(mform_dim(12) == 2);
    CHECK(mform_dim(14) == 1);
    CHECK(mform_dim(-4) == 0);
    auto b12 = mform_basis(12);
    REQUIRE(b12.size() == 2);
    CHECK(b12[0] == std::pair<int, int>(3, 0));
    CHECK(b12[1] == std::pair<int, int>(0, 2));
}

TEST_CASE("mform_to_series matches direct expansion") {
    ModularFormExact f;
    f.weight = 12;
    f.coords[{3, 0}] = rat(1, 1728);
    f.coords[{0, 2}] = rat(-1, 1728);
    QSeries s = mform_to_series(f, 20);
    CHECK(eq_to_prec(s, eta_pow(Rat(24), 20)));
}
