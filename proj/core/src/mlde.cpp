#include <mmf/mlde.hpp>

#include <algorithm>
#include <complex>
#include <cmath>
#include <sstream>

namespace mmf {

namespace {

long steps_hint(const QSeries& f) {
    auto fr = f.frontier();
    if (!fr) return 64;
    return std::max<long>(ceil_long(*fr) + 2, 4);
}

Rat rat_pow(const Rat& x, long e) {
    Rat r(1);
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

} // namespace

Rat IndicialPoly::eval(const Rat& t) const {
    Rat v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
}

Rat IndicialPoly::root_sum() const {
    if (c.size() < 2) return Rat(0);
    return -c[c.size() - 2] / c.back();
}

QSeries serre(const Rat& k, const QSeries& f) {
    if (f.is_zero()) return f;
    QSeries d = q_derivative(f);
    if (k == 0) return d;
    QSeries e2 = eisenstein(2, steps_hint(f));
    return add(d, scale(mul(e2, f), -k / 12));
}

QSeries serre_iter(const Rat& k, long i, const QSeries& f) {
    if (i < 0) throw std::invalid_argument("iteration count must be nonnegative");
    QSeries g = f;
    for (long l = 0; l < i; ++l) g = serre(k + 2 * l, g);
    return g;
}

QSeries apply_mlde(const MLDE& L, const QSeries& f) {
    long n = L.order;
    std::vector<QSeries> ders(n + 1);
    ders[0] = f;
    for (long l = 1; l <= n; ++l) ders[l] = serre(L.weight + 2 * (l - 1), ders[l - 1]);
    QSeries acc = ders[n];
    long prec = steps_hint(f);
    for (const auto& [tw, P] : L.coeffs)
        acc = add(acc, mul(mform_to_series(P, prec), ders[n - tw / 2]));
    return acc;
}

MLDE fit_mlde(const Rat& k, const std::vector<QSeries>& solutions, long n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (solutions.empty()) throw std::invalid_argument("need at least one solution");

    // unknowns: coordinates of P_{2j} on the weight-2j monomial basis
    struct Unknown {
        long tw;
        std::pair<int, int> mono;
    };
    std::vector<Unknown> unknowns;
    for (long j = 2; j <= n; ++j)
        for (const auto& mono : mform_basis(2 * j)) unknowns.push_back({2 * j, mono});
    long U = static_cast<long>(unknowns.size());
    long rows_per_solution = U + std::max<long>(20, n);

    long prec = 4;
    for (const auto& f : solutions) prec = std::max(prec, steps_hint(f));
    QSeries e4 = eisenstein(4, prec);
    QSeries e6 = eisenstein(6, prec);
    std::vector<QSeries> basis_series;
    basis_series.reserve(U);
    for (const auto& u : unknowns)
        basis_series.push_back(mul(pow_int(e4, u.mono.first), pow_int(e6, u.mono.second)));

    std::vector<std::vector<Rat>> rows; // U coefficients + rhs
    for (const auto& f : solutions) {
        if (f.is_zero()) continue;
        std::vector<QSeries> ders(n + 1);
        ders[0] = f;
        for (long l = 1; l <= n; ++l) ders[l] = serre(k + 2 * (l - 1), ders[l - 1]);

        std::vector<QSeries> terms;
        terms.reserve(U);
        for (long u = 0; u < U; ++u)
            terms.push_back(mul(basis_series[u], ders[n - unknowns[u].tw / 2]));

        Rat emin = f.leading_exponent();
        std::optional<Rat> fmin = ders[n].frontier();
        if (!ders[n].coeffs().empty()) emin = std::min(emin, ders[n].leading_exponent());
        for (const auto& t : terms) {
            if (!t.coeffs().empty()) emin = std::min(emin, t.leading_exponent());
            if (auto fr = t.frontier())
                fmin = fmin ? std::min(*fmin, *fr) : *fr;
        }
        for (long m = 0; m < rows_per_solution; ++m) {
            Rat e = emin + m;
            if (fmin && e >= *fmin) break;
            std::vector<Rat> row(U + 1);
            for (long u = 0; u < U; ++u) row[u] = coeff_at(terms[u], e);
            row[U] = -coeff_at(ders[n], e);
            rows.push_back(std::move(row));
        }
    }

    // exact Gaussian elimination on the augmented system
    long nrows = static_cast<long>(rows.size());
    std::vector<long> pivot_row(U, -1);
    long rank = 0;
    for (long col = 0; col < U && rank < nrows; ++col) {
        long p = -1;
        for (long r = rank; r < nrows; ++r)
            if (rows[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        Rat inv = 1 / rows[rank][col];
        for (long c = col; c <= U; ++c) rows[rank][c] *= inv;
        for (long r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rat factor = rows[r][col];
            for (long c = col; c <= U; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    auto diag = [&] {
        std::ostringstream os;
        os << " (unknowns=" << U << ", rows=" << nrows << ", rank=" << rank << ")";
        return os.str();
    };
    for (long r = rank; r < nrows; ++r)
        if (rows[r][U] != 0)
            throw std::runtime_error(
                "no monic MLDE of this order/weight annihilates the inputs" + diag());
    if (rank < U) throw std::runtime_error("insufficient precision or rank" + diag());

    MLDE L;
    L.weight = k;
    L.order = n;
    for (long j = 2; j <= n; ++j) L.coeffs[2 * j] = ModularFormExact{2 * j, {}};
    for (long u = 0; u < U; ++u) {
        Rat v = rows[pivot_row[u]][U];
        if (v != 0) L.coeffs[unknowns[u].tw].coords[unknowns[u].mono] = v;
    }

    // consistency on everything the inputs still have to say
    for (const auto& f : solutions) {
        QSeries r = apply_mlde(L, f);
        if (!r.coeffs().empty())
            throw std::runtime_error(
                "no monic MLDE of this order/weight annihilates the inputs" + diag());
    }
    return L;
}

namespace {

// ascending-coefficient polynomial times (t - r)
std::vector<Rat> mul_linear(const std::vector<Rat>& p, const Rat& r) {
    std::vector<Rat> out(p.size() + 1);
    for (size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= r * p[i];
    }
    return out;
}

Rat constant_term(const ModularFormExact& f) {
    Rat s(0);
    for (const auto& [mono, v] : f.coords) s += v;
    return s;
}

} // namespace

IndicialPoly indicial_poly(const MLDE& L) {
    long n = L.order;
    // pref[i] = prod_{l=0}^{i-1} (t - (k+2l)/12)
    std::vector<std::vector<Rat>> pref(n + 1);
    pref[0] = {Rat(1)};
    for (long i = 1; i <= n; ++i)
        pref[i] = mul_linear(pref[i - 1], (L.weight + 2 * (i - 1)) / 12);
    std::vector<Rat> psi = pref[n];
    for (const auto& [tw, P] : L.coeffs) {
        Rat p0 = constant_term(P);
        if (p0 == 0) continue;
        const auto& q = pref[n - tw / 2];
        for (size_t i = 0; i < q.size(); ++i) psi[i] += p0 * q[i];
    }
    return IndicialPoly{std::move(psi)};
}

namespace {

// best rational approximation with bounded denominator, by continued fractions
Rat rationalize(double x, long maxden) {
    long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        double fa = std::floor(v);
        if (fa > 1e15 || fa < -1e15) break;
        long a = static_cast<long>(fa);
        if (k0 > maxden / std::max<long>(std::abs(a), 1) && it > 0) break;
        long h2 = a * h0 + h1, k2 = a * k0 + k1;
        if (k2 > maxden) break;
        h1 = h0; h0 = h2;
        k1 = k0; k0 = k2;
        double frac = v - fa;
        if (frac < 1e-12) break;
        v = 1.0 / frac;
    }
    return rat(h0, k0);
}

} // namespace

std::vector<Rat> rational_roots(const IndicialPoly& psi) {
    long n = psi.degree();
    // Durand-Kerner on the monic double-precision image
    std::vector<std::complex<double>> a(n + 1);
    double lead = psi.c.back().get_d();
    for (long i = 0; i <= n; ++i) a[i] = psi.c[i].get_d() / lead;
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    z[0] = seed;
    for (long i = 1; i < n; ++i) z[i] = z[i - 1] * seed;
    for (int it = 0; it < 500; ++it) {
        double delta = 0;
        for (long i = 0; i < n; ++i) {
            std::complex<double> p = a[n];
            for (long j = n - 1; j >= 0; --j) p = p * z[i] + a[j];
            std::complex<double> d(1, 0);
            for (long j = 0; j < n; ++j)
                if (j != i) d *= z[i] - z[j];
            std::complex<double> step = p / d;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-14) break;
    }
    std::vector<Rat> roots;
    for (long i = 0; i < n; ++i) {
        if (std::abs(z[i].imag()) > 1e-7) continue;
        Rat cand = rationalize(z[i].real(), 1000000);
        if (psi.eval(cand) != 0) continue;
        if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
    }
    std::sort(roots.begin(), roots.end(), [](const Rat& x, const Rat& y) { return x > y; });
    return roots;
}

QSeries frobenius_solve(const MLDE& L, const Rat& lam, long prec, FrobeniusReport* report) {
    if (prec < 1) throw std::invalid_argument("prec must be positive");
    long n = L.order;
    long work = prec + 2;
    QSeries e2 = eisenstein(2, work);

    // expand the operator as sum_j T_j(q) D^j by pushing Serre layers through
    std::vector<QSeries> C = {QSeries::constant(1)};
    std::vector<QSeries> T(n + 1);
    auto accumulate_stage = [&](long i) {
        // stage i carries the coefficient P_{2(n-i)}, and the monic top at i = n
        if (i == n) {
            for (long j = 0; j <= i; ++j) T[j] = add(T[j], C[j]);
            return;
        }
        auto it = L.coeffs.find(2 * (n - i));
        if (it == L.coeffs.end()) return;
        QSeries p = mform_to_series(it->second, work);
        for (long j = 0; j <= i; ++j) T[j] = add(T[j], mul(p, C[j]));
    };
    for (long i = 0; i <= n; ++i) {
        accumulate_stage(i);
        if (i == n) break;
        Rat w = L.weight + 2 * i;
        std::vector<QSeries> next(i + 2);
        for (long j = 0; j <= i + 1; ++j) {
            QSeries v = QSeries::zero();
            if (j <= i) v = add(q_derivative(C[j]), scale(mul(e2, C[j]), -w / 12));
            if (j > 0) v = add(v, C[j - 1]);
            next[j] = v;
        }
        C = std::move(next);
    }

    std::vector<std::vector<Rat>> t(n + 1, std::vector<Rat>(prec));
    for (long j = 0; j <= n; ++j)
        for (long l = 0; l < prec; ++l) t[j][l] = coeff_at(T[j], Rat(l));

    auto psi_at = [&](const Rat& x) {
        Rat s(0);
        for (long j = 0; j <= n; ++j) s += t[j][0] * rat_pow(x, j);
        return s;
    };
    if (psi_at(lam) != 0) throw std::invalid_argument("not an indicial root");

    std::vector<Rat> a(prec);
    a[0] = 1;
    for (long m = 1; m < prec; ++m) {
        Rat rhs(0);
        for (long l = 1; l <= m; ++l) {
            Rat x = lam + (m - l);
            Rat term(0);
            for (long j = 0; j <= n; ++j)
                if (t[j][l] != 0) term += t[j][l] * rat_pow(x, j);
            rhs -= term * a[m - l];
        }
        Rat psi = psi_at(lam + m);
        if (psi == 0) {
            if (rhs != 0) throw std::runtime_error("logarithmic case");
            a[m] = 0;
            if (report) report->resonant_steps.push_back(m);
        } else {
            a[m] = rhs / psi;
        }
    }

    long den = lam.get_den().get_si();
    std::vector<Rat> coeffs(prec * den);
    for (long m = 0; m < prec; ++m) coeffs[m * den] = a[m];
    return QSeries(den, lam.get_num().get_si(), std::move(coeffs));
}

MLDE eta_conjugate(const MLDE& L, const Rat& ell) {
    if (!is_integer(ell))
        throw std::invalid_argument("eta conjugation needs an integer power");
    MLDE out = L;
    out.weight = L.weight + ell / 2;
    return out;
}

std::vector<QSeries> normalize_basis(const std::vector<QSeries>& basis) {
    std::vector<QSeries> out;
    out.reserve(basis.size());
    for (const auto& f : basis) {
        if (f.is_zero()) throw std::invalid_argument("cannot normalize the zero series");
        out.push_back(scale(f, 1 / f.coeffs()[0]));
    }
    // clear each series at the other leading exponents, largest first
    std::vector<size_t> order(out.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return out[x].leading_exponent() > out[y].leading_exponent();
    });
    for (size_t oi = 0; oi < order.size(); ++oi) {
        size_t i = order[oi];
        for (size_t oj = 0; oj < oi; ++oj) {
            size_t j = order[oj];
            Rat gap = out[j].leading_exponent() - out[i].leading_exponent();
            if (gap <= 0 || !is_integer(gap)) continue;
            auto fr = out[i].frontier();
            if (fr && out[j].leading_exponent() >= *fr) continue;
            Rat c = coeff_at(out[i], out[j].leading_exponent());
            if (c != 0) out[i] = sub(out[i], scale(out[j], c));
        }
    }
    return out;
}

} // namespace mmf
