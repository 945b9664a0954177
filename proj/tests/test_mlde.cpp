#include <doctest.h>
#include <mmf/mlde.hpp>
#include <mmf/minimal.hpp>

#include <random>

using namespace mmf;

namespace {

std::vector<QSeries> scaled_chars(long p, long prec) {
    std::vector<QSeries> out;
    for (long s = 1; s <= (p - 1) / 2; ++s) out.push_back(scaled_character(p, s, prec));
    return out;
}

MLDE fit_level(long p, long prec) {
    return fit_mlde(rat(p - 3, 2 * p), scaled_chars(p, prec), (p - 1) / 2);
}

} // namespace

TEST_CASE("Serre operator on Eisenstein series") {
    long prec = 30;
    QSeries e4 = eisenstein(4, prec);
    QSeries e6 = eisenstein(6, prec);
    CHECK(eq_to_prec(serre(Rat(4), e4), scale(e6, rat(-1, 3))));
    CHECK(eq_to_prec(serre(Rat(6), e6), scale(mul(e4, e4), rat(-1, 2))));
    CHECK(eq_to_prec(serre(Rat(0), QSeries::constant(1).truncated(Rat(prec))),
                     QSeries::zero().truncated(Rat(prec))));
    // eta has weight 1/2 and d_{1/2}(eta) = 0
    QSeries dh = serre(rat(1, 2), eta(prec));
    for (const Rat& c : dh.coeffs()) CHECK(c == 0);
}

TEST_CASE("iterated Serre operator") {
    QSeries e4 = eisenstein(4, 25);
    CHECK(eq_to_prec(serre_iter(Rat(4), 0, e4), e4));
    CHECK(eq_to_prec(serre_iter(Rat(4), 1, e4), serre(Rat(4), e4)));
    CHECK(eq_to_prec(serre_iter(Rat(4), 2, e4), serre(Rat(6), serre(Rat(4), e4))));
}

TEST_CASE("second iterate on the weight-1/5 character") {
    // d^2_{1/5}(f) = 11/3600 E4 f for both p = 5 scaled characters
    QSeries e4 = eisenstein(4, 40);
    for (long s : {1, 2}) {
        QSeries f = scaled_character(5, s, 40);
        QSeries lhs = serre_iter(rat(1, 5), 2, f);
        QSeries rhs = scale(mul(e4, f), rat(11, 3600));
        CHECK(eq_to_prec(lhs, rhs));
    }
}

TEST_CASE("fit_mlde recovers the order-2 equation") {
    MLDE L = fit_level(5, 60);
    CHECK(L.order == 2);
    CHECK(L.weight == rat(1, 5));
    REQUIRE(L.coeffs.count(4) == 1);
    const auto& p4 = L.coeffs.at(4).coords;
    REQUIRE(p4.size() == 1);
    CHECK(p4.at({1, 0}) == rat(-11, 3600));
    // the fitted operator annihilates the inputs
    for (const auto& f : scaled_chars(5, 60)) {
        QSeries r = apply_mlde(L, f);
        CHECK(r.coeffs().empty());
    }
    // and does not annihilate an unrelated form
    CHECK(!apply_mlde(L, eisenstein(4, 60)).coeffs().empty());
}

TEST_CASE("fit_mlde rejects impossible fits") {
    // E4 and E6 satisfy no common monic MLDE of order 2 and weight 4
    CHECK_THROWS(fit_mlde(Rat(4), {eisenstein(4, 40), eisenstein(6, 40)}, 2));
}

TEST_CASE("indicial polynomial and rational roots") {
    MLDE L5 = fit_level(5, 60);
    IndicialPoly psi = indicial_poly(L5);
    CHECK(psi.degree() == 2);
    auto roots = rational_roots(psi);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == rat(1, 5));
    CHECK(roots[1] == 0);
    CHECK(psi.root_sum() == rat(1, 5));
    CHECK(psi.eval(rat(1, 5)) == 0);
    CHECK(psi.eval(rat(1, 7)) != 0);
}

TEST_CASE("weight-0 indicial nodes sit at l/6") {
    // An order-n weight-0 MLDE with all P = 0 has Psi(t) = prod_l (t - l/6).
    MLDE L;
    L.weight = 0;
    L.order = 4;
    IndicialPoly psi = indicial_poly(L);
    for (long l = 0; l < 4; ++l) CHECK(psi.eval(rat(l, 6)) == 0);
}

TEST_CASE("frobenius regenerates the characters") {
    MLDE L = fit_level(5, 60);
    auto expected = normalize_basis(scaled_chars(5, 50));
    auto roots = rational_roots(indicial_poly(L));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        QSeries sol = frobenius_solve(L, roots[i], 45);
        CHECK(eq_to_prec(sol.truncated(roots[i] + 44), expected[i].truncated(roots[i] + 44)));
    }
    CHECK_THROWS(frobenius_solve(L, rat(1, 3), 10));
}

TEST_CASE("frobenius records resolved resonances") {
    // p = 15 roots include 2/5 and 0 with a root exactly 1 above each
    MLDE L = fit_level(15, 80);
    FrobeniusReport rep;
    frobenius_solve(L, rat(2, 5), 20, &rep);
    CHECK(rep.resonant_steps == std::vector<long>{1});
    FrobeniusReport rep2;
    frobenius_solve(L, Rat(0), 20, &rep2);
    CHECK(rep2.resonant_steps == std::vector<long>{1});
    FrobeniusReport rep3;
    frobenius_solve(L, rat(7, 5), 20, &rep3);
    CHECK(rep3.resonant_steps.empty());
}

TEST_CASE("eta conjugation shifts the weight") {
    MLDE L = fit_level(5, 60);
    CHECK_THROWS(eta_conjugate(L, rat(1, 2)));
    MLDE Lc = eta_conjugate(L, Rat(8));
    CHECK(Lc.weight == rat(1, 5) + 4);
    CHECK(Lc.coeffs == L.coeffs);
    // eta^8 times a solution solves the conjugated equation
    QSeries g = mul(eta_pow(Rat(8), 60), scaled_character(5, 1, 60));
    CHECK(apply_mlde(Lc, g).coeffs().empty());
}

TEST_CASE("Serre commutation with eta powers") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<long> num(-9, 9), dd(1, 9);
    std::vector<Rat> c(120);
    for (auto& x : c) x = rat(num(rng), dd(rng));
    QSeries f(4, 3, std::move(c));
    Rat k = rat(3, 7);
    for (long ell : {-3L, 1L, 7L, 12L}) {
        QSeries el = eta_pow(Rat(ell), 40);
        for (long n : {1L, 2L, 4L}) {
            QSeries lhs = serre_iter(k + rat(ell, 2), n, mul(el, f));
            QSeries rhs = mul(el, serre_iter(k, n, f));
            CHECK(eq_to_prec(lhs.truncated(Rat(25)), rhs.truncated(Rat(25))));
        }
    }
}

TEST_CASE("normalize_basis clears cross leading terms") {
    auto basis = normalize_basis(scaled_chars(15, 30));
    REQUIRE(basis.size() == 7);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(coeff_at(basis[i], basis[i].leading_exponent()) == 1);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            Rat gap = basis[j].leading_exponent() - basis[i].leading_exponent();
            if (gap > 0 && is_integer(gap))
                CHECK(coeff_at(basis[i], basis[j].leading_exponent()) == 0);
        }
    }
}
