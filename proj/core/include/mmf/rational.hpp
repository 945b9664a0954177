#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace mmf {

// Exact rational arithmetic is GMP's mpq_class throughout.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num/den" or "num". Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    r.canonicalize();
    return r;
}

// Always emits "num/den", including "/1", so output is schema-uniform.
inline std::string format_rat(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor of a rational as a long. Assumes the value fits.
inline long floor_long(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

inline long ceil_long(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

inline long lcm_long(long a, long b) {
    mpz_class r;
    mpz_class za(a), zb(b);
    mpz_lcm(r.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
    return r.get_si();
}

} // namespace mmf
