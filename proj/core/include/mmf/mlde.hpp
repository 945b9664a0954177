#pragma once

#include <mmf/classical.hpp>

namespace mmf {

// Monic MLDE of weight k and order n:
//   d_k^n(f) + sum_{j=2}^{n} P_{2j} d_k^{n-j}(f) = 0
// with P_{2j} in M_{2j}(SL2(Z)). The weight-2 slot does not exist: M_2 = 0.
struct MLDE {
    Rat weight;
    long order = 0;
    std::map<long, ModularFormExact> coeffs; // 2j -> P_{2j}, j = 2..order
};

// Indicial polynomial Psi(t), monic, degree = order, ascending coefficients.
struct IndicialPoly {
    std::vector<Rat> c;

    long degree() const { return static_cast<long>(c.size()) - 1; }
    Rat eval(const Rat& t) const;
    // Sum of all roots with multiplicity, read off the subleading coefficient.
    Rat root_sum() const;
};

// Serre operator d_k(f) = D(f) - (k/12) E2 f, D = q d/dq.
QSeries serre(const Rat& k, const QSeries& f);
// d_k^i = d_{k+2(i-1)} o ... o d_{k+2} o d_k, with d_k^0 = id.
QSeries serre_iter(const Rat& k, long i, const QSeries& f);

QSeries apply_mlde(const MLDE& L, const QSeries& f);

// The unique monic MLDE of the given weight and order annihilating all
// inputs. Solves the exact linear system in the P_{2j} coordinates, then
// verifies the residuals vanish to all remaining available precision.
MLDE fit_mlde(const Rat& k, const std::vector<QSeries>& solutions, long n);

// Computed by leading-term propagation: d_k^i acting on q^t contributes
// prod_{j<i} (t - (k+2j)/12), assembled with the constant terms P_{2j,0}.
IndicialPoly indicial_poly(const MLDE& L);

// All rational roots of Psi, each verified exactly, sorted descending.
std::vector<Rat> rational_roots(const IndicialPoly& psi);

// Steps m where Psi(lam+m) = 0 and the free coefficient was set to zero.
struct FrobeniusReport {
    std::vector<long> resonant_steps;
};

// The solution q^lam (1 + sum a_m q^m) by coefficient recursion, to prec
// integer steps. At a resonant step the recursion only continues if the
// obstruction vanishes; the free coefficient is then taken to be zero and
// the step recorded. A nonzero obstruction is the logarithmic case.
QSeries frobenius_solve(const MLDE& L, const Rat& lam, long prec,
                        FrobeniusReport* report = nullptr);

// Conjugation by eta^ell (ell must be an integer): same P's, weight k + ell/2.
MLDE eta_conjugate(const MLDE& L, const Rat& ell);

// Triangular normalization: leading coefficients 1, and each series has
// coefficient zero at the leading exponents of the others (where those
// differ by a positive integer). Matches the Frobenius zero-free-coefficient
// convention. Order is preserved.
std::vector<QSeries> normalize_basis(const std::vector<QSeries>& basis);

} // namespace mmf
