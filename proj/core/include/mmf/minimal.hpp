#pragma once

#include <mmf/classical.hpp>
#include <string>

namespace mmf {

// Numerology of the (P,Q) minimal model.
struct MinimalModelParams {
    long P = 0, Q = 0;
    Rat c;
    std::map<std::pair<long, long>, Rat> h_table; // (r,s) -> h, full rectangle
    Rat h_min;
    Rat c_eff;
    long n_level = 0;
};

Rat central_charge(long P, long Q);
Rat conformal_weight(long P, long Q, long r, long s);
// (h_min, c_eff) from the closed forms, cross-checked against c - 24*h_min.
std::pair<Rat, Rat> ceff_hmin(long P, long Q);

// Closed form 12(2r+3)/(gcd(4,r)gcd(3,r)) with r = (p-3)/2.
long n_level_closed(long p);
// Brute force: lcm of denominators of h_{r,s} - c/24 over the full grid.
long n_level_oracle(long P, long Q);

MinimalModelParams minimal_params(long P, long Q);

// Character of the simple module: (theta_{PQ,Qr-Ps} - theta_{PQ,Qr+Ps})/eta.
QSeries character(long P, long Q, long r, long s, long prec);

// f_r = Theta_{(r/2p,1/2)}(p tau)/eta^{3/p} * e((p-1)(r-1)/4p), r odd.
PhasedSeries ibukiyama(long p, long r, long prec);

// eta^{c_eff} * ch_{2,p;1,s}; its series equals ibukiyama(p, p-2s).series.
QSeries scaled_character(long p, long s, long prec);

// The exact connecting root of unity in
// eta^{c_eff} ch_{2,p;1,s} = e(alpha) f_{p-2s}, from Phase arithmetic.
Phase scaled_character_phase(long p, long s);

// ---- product-identity checker -------------------------------------------

struct CharFactor {
    long p = 0;
    long s = 0;
    long power = 1;
};

struct CharTerm {
    Rat coeff = Rat(1);
    std::vector<CharFactor> factors;
};

// Sum of products of scaled characters.
using CharExpr = std::vector<CharTerm>;

// True iff both sides agree to the requested precision (integer q-steps).
// prec below the floor of 50 steps is rejected.
bool verify_identity(const CharExpr& lhs, const CharExpr& rhs, long prec);

struct CharIdentity {
    std::string name;
    CharExpr lhs, rhs;
};

// The three level-(5,15) product identities.
const std::vector<CharIdentity>& identities_5_15();
// The ten level-(7,21) product identities.
const std::vector<CharIdentity>& identities_7_21();

} // namespace mmf
