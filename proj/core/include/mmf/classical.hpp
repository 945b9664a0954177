#pragma once

#include <mmf/qseries.hpp>
#include <map>
#include <vector>

namespace mmf {

// Element of M_w(SL2(Z)) as exact rational coordinates on the monomial
// basis {E4^a E6^b : 4a + 6b = w}.
struct ModularFormExact {
    long weight = 0;
    std::map<std::pair<int, int>, Rat> coords; // (a, b) -> coefficient

    bool operator==(const ModularFormExact& o) const {
        return weight == o.weight && coords == o.coords;
    }
};

// Exact Bernoulli number, convention B2 = 1/6, B4 = -1/30.
Rat bernoulli(long n);

// Normalized Eisenstein series E_w = 1 - (2w/B_w) sum sigma_{w-1}(n) q^n,
// including the quasi-modular E2. prec is in integer q-steps.
QSeries eisenstein(long w, long prec);

// Dedekind eta on lattice N = 24 via the pentagonal-number expansion.
QSeries eta(long prec);

// eta^r for rational r; leading exponent r/24.
QSeries eta_pow(const Rat& r, long prec);

// theta_{a,b} = sum_n q^{a(n + b/2a)^2}, a > 0; exponents (2an+b)^2/(4a).
QSeries theta_ab(const Rat& a, const Rat& b, long prec);

// Theta constant with characteristic (m1, m2) at p*tau:
//   sum_n e((n+m1) m2) q^{(p/2)(n+m1)^2}.
// For m2 in (1/2)Z the unimodular factor splits into a sign pattern kept in
// the coefficients and a single global phase e(m1*m2); anything else is
// rejected as a non-separable phase.
PhasedSeries theta_constant(const Rat& m1, const Rat& m2, long p, long prec);

long mform_dim(long w);
std::vector<std::pair<int, int>> mform_basis(long w);
QSeries mform_to_series(const ModularFormExact& f, long prec);

} // namespace mmf
