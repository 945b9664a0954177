#pragma once

#include <mmf/minimal.hpp>
#include <mmf/mlde.hpp>
#include <complex>
#include <optional>
#include <string>

namespace mmf {

using Cplx = std::complex<double>;

struct RepMatrix {
    long p = 0;
    long size = 0;
    std::vector<std::vector<Cplx>> entries;
    std::string label; // "S", "T", or "derived"
};

struct AutomorphyConstant {
    std::string gamma_label; // "S" or "T"
    long p = 0;
    Cplx value;
    Rat weight;                 // (p-3)/2p
    std::optional<Phase> exact; // T side only
};

// Diagonal T action in the basis indexed by s = 1..(p-1)/2 (r = p-2s
// descending): entry e((r^2 - p^2)/8p).
RepMatrix t_matrix(long p);
std::vector<Phase> t_phases(long p);

// The S action in the same basis.
RepMatrix s_matrix(long p);

// Symmetric tensor power of a 2x2 matrix: the (m+1)x(m+1) action on the
// monomials x1^{m-l} x2^l, l = 0..m.
RepMatrix sym_power(const RepMatrix& M, long m);

RepMatrix rep_mul(const RepMatrix& A, const RepMatrix& B);

struct EvalResult {
    Cplx value = 0;
    double tail_bound = 0;
};

// Partial sum of the q-expansion at tau with a geometric tail estimate.
// Throws "increase precision" if the estimate exceeds tol.
EvalResult eval_series(const QSeries& f, Cplx tau, double tol = 1e-9);
EvalResult eval_series(const PhasedSeries& f, Cplx tau, double tol = 1e-9);

// v_p(T) exact from eta(tau+1) = e(1/24) eta(tau); v_p(S) numeric at
// tau = 6i/5 with principal branches, cross-checked at a second point.
std::pair<AutomorphyConstant, AutomorphyConstant> extract_multiplier(long p, long prec = 200);

struct TransformReport {
    long p = 0;
    std::string relation;
    double max_abs_dev = 0;
    double tol = 0;
    bool pass = false;
};

// gamma is "S" or "T". T is checked exactly through Phase arithmetic,
// S numerically against j_p(S,tau) * s_matrix * F(tau).
TransformReport check_transformation(long p, const std::string& gamma, Cplx tau, long prec,
                                     double tol);

struct VvmfSym5 {
    Rat k;
    std::vector<QSeries> components; // f_l = f2^{m-l} f1^l, leading exponents l/5
    bool exponent_check = false;
    MLDE mlde; // order 1+5k, weight k
};

VvmfSym5 vvmf_sym5(const Rat& k, long prec);

} // namespace mmf
