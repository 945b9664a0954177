#include <mmf/classical.hpp>

#include <numeric>

namespace mmf {

Rat bernoulli(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli index must be nonnegative");
    // sum_{k=0}^{n} C(n+1,k) B_k = 0
    std::vector<Rat> b(n + 1);
    for (long m = 0; m <= n; ++m) {
        if (m == 0) {
            b[0] = 1;
            continue;
        }
        Rat s(0);
        mpz_class binom;
        for (long k = 0; k < m; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
            s += Rat(binom) * b[k];
        }
        b[m] = -s / Rat(m + 1);
    }
    return b[n];
}

QSeries eisenstein(long w, long prec) {
    if (w < 2 || w % 2 != 0)
        throw std::invalid_argument("Eisenstein weight must be even and >= 2");
    std::vector<Rat> c(std::max<long>(prec, 1));
    c[0] = 1;
    // sigma_{w-1} by divisor sieve
    std::vector<mpz_class> sigma(c.size());
    for (long d = 1; d < static_cast<long>(c.size()); ++d) {
        mpz_class dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), d, w - 1);
        for (long n = d; n < static_cast<long>(c.size()); n += d) sigma[n] += dp;
    }
    Rat factor = Rat(-2 * w) / bernoulli(w);
    for (long n = 1; n < static_cast<long>(c.size()); ++n) c[n] = factor * Rat(sigma[n]);
    return QSeries(1, 0, std::move(c));
}

QSeries eta(long prec) {
    long slots = 24 * prec;
    std::vector<Rat> c(slots);
    for (long k = 0;; ++k) {
        bool any = false;
        for (long kk : {k, -k}) {
            if (kk == 0 && k != 0) continue;
            long e = kk * (3 * kk - 1) / 2;
            if (24 * e < slots) {
                c[24 * e] = (kk % 2 == 0) ? 1 : -1;
                any = true;
            }
            if (k == 0) break;
        }
        if (!any && k > 0) break;
    }
    return QSeries(24, 1, std::move(c));
}

QSeries eta_pow(const Rat& r, long prec) {
    if (r == 0) return QSeries::constant(1);
    return rational_pow(eta(prec), r);
}

namespace {

// Shared sum kernel for theta series: accumulates sign(n) at exponent e(n)
// for the quadratic exponent map, out to lead + prec integer steps.
QSeries theta_sum(const Rat& quad, const Rat& lin, const Rat& cst, bool alternating,
                  long prec) {
    long N = lcm_long(lcm_long(quad.get_den().get_si(), lin.get_den().get_si()),
                      cst.get_den().get_si());
    auto expo = [&](long n) -> Rat { return quad * Rat(n) * Rat(n) + lin * Rat(n) + cst; };
    // vertex of the parabola lies in [center, center+1)
    long center = floor_long(-lin / (2 * quad));
    Rat lead = expo(center);
    for (long n : {center - 1, center + 1, center + 2})
        if (expo(n) < lead) lead = expo(n);
    Rat frontier = lead + prec;
    std::vector<Rat> c(prec * N);
    long lead_slot = Rat(lead * N).get_num().get_si();
    auto put = [&](long n) {
        Rat e = expo(n);
        if (e >= frontier) return false;
        long slot = Rat(e * N).get_num().get_si() - lead_slot;
        c[slot] += (alternating && (n % 2 != 0)) ? -1 : 1;
        return true;
    };
    for (long n = center; put(n) || n < center + 3; ++n) {}
    for (long n = center - 1; put(n) || n > center - 4; --n) {}
    return QSeries(N, lead_slot, std::move(c));
}

} // namespace

QSeries theta_ab(const Rat& a, const Rat& b, long prec) {
    if (a <= 0) throw std::invalid_argument("theta_ab requires a > 0");
    // a(n + b/2a)^2 = a n^2 + b n + b^2/(4a)
    return theta_sum(a, b, b * b / (4 * a), /*alternating=*/false, prec);
}

PhasedSeries theta_constant(const Rat& m1, const Rat& m2, long p, long prec) {
    if (p < 1) throw std::invalid_argument("theta_constant requires positive scale");
    Rat two_m2 = 2 * m2;
    if (!is_integer(two_m2))
        throw std::invalid_argument("non-separable phase: m2 must be a half-integer");
    bool alternating = mpz_odd_p(two_m2.get_num().get_mpz_t());
    // (p/2)(n+m1)^2 = (p/2) n^2 + p m1 n + (p/2) m1^2
    Rat ph = rat(p, 2);
    QSeries s = theta_sum(ph, Rat(p) * m1, ph * m1 * m1, alternating, prec);
    return {Phase::e(m1 * m2), s};
}

long mform_dim(long w) {
    if (w % 2 != 0) throw std::invalid_argument("modular form weight must be even");
    if (w < 0) return 0;
    return (w % 12 == 2) ? w / 12 : w / 12 + 1;
}

std::vector<std::pair<int, int>> mform_basis(long w) {
    if (w % 2 != 0) throw std::invalid_argument("modular form weight must be even");
    std::vector<std::pair<int, int>> out;
    for (long a = w / 4; a >= 0; --a)
        if ((w - 4 * a) % 6 == 0) out.emplace_back(static_cast<int>(a),
                                                   static_cast<int>((w - 4 * a) / 6));
    return out;
}

QSeries mform_to_series(const ModularFormExact& f, long prec) {
    QSeries e4 = eisenstein(4, prec);
    QSeries e6 = eisenstein(6, prec);
    QSeries acc = QSeries::zero();
    for (const auto& [mono, coeff] : f.coords) {
        QSeries t = mul(pow_int(e4, mono.first), pow_int(e6, mono.second));
        acc = add(acc, scale(t, coeff));
    }
    if (acc.is_zero()) return acc;
    return acc.truncated(Rat(prec));
}

} // namespace mmf
