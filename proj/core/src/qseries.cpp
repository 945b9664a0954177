#include <mmf/qseries.hpp>

#include <algorithm>
#include <numeric>

namespace mmf {

namespace {

constexpr long kDefaultExactPrec = 64;

// Kernels on plain coefficient vectors of unit series (index 0 is the
// constant term). Inputs are compressed by the gcd of the nonzero support,
// so these run on the effective step count, not the raw slot count.

// 1 / (1 + sum_{k>=1} u_k x^k)
std::vector<Rat> vec_recip(const std::vector<Rat>& u) {
    std::vector<Rat> b(u.size());
    b[0] = 1;
    for (size_t n = 1; n < u.size(); ++n) {
        Rat s(0);
        for (size_t k = 1; k <= n; ++k)
            if (u[k] != 0 && b[n - k] != 0) s -= u[k] * b[n - k];
        b[n] = s;
    }
    return b;
}

// log of a unit series via u' = w' u, integrated termwise.
std::vector<Rat> vec_log(const std::vector<Rat>& u) {
    std::vector<Rat> w(u.size());
    for (size_t m = 1; m < u.size(); ++m) {
        Rat s = Rat(static_cast<long>(m)) * u[m];
        for (size_t j = 1; j < m; ++j)
            if (w[j] != 0 && u[m - j] != 0) s -= Rat(static_cast<long>(j)) * w[j] * u[m - j];
        w[m] = s / Rat(static_cast<long>(m));
    }
    return w;
}

// exp of a series with zero constant term via f' = w' f.
std::vector<Rat> vec_exp(const std::vector<Rat>& w) {
    std::vector<Rat> f(w.size());
    if (f.empty()) return f;
    f[0] = 1;
    for (size_t m = 1; m < w.size(); ++m) {
        Rat s(0);
        for (size_t j = 1; j <= m; ++j)
            if (w[j] != 0 && f[m - j] != 0) s += Rat(static_cast<long>(j)) * w[j] * f[m - j];
        f[m] = s / Rat(static_cast<long>(m));
    }
    return f;
}

// gcd of the indices of nonzero entries at index >= 1; 0 if there are none.
long support_gcd(const std::vector<Rat>& c) {
    long g = 0;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) g = std::gcd(g, static_cast<long>(i));
    return g;
}

std::vector<Rat> compress(const std::vector<Rat>& c, long g, long total) {
    std::vector<Rat> out((total - 1) / g + 1);
    for (size_t k = 0; k < out.size(); ++k)
        if (static_cast<long>(k) * g < static_cast<long>(c.size())) out[k] = c[k * g];
    return out;
}

std::vector<Rat> expand(const std::vector<Rat>& v, long g, long total) {
    std::vector<Rat> out(total);
    for (size_t k = 0; k < v.size(); ++k)
        if (static_cast<long>(k) * g < total) out[k * g] = v[k];
    return out;
}

// Rescales both operands onto the lcm lattice without touching frontiers.
std::pair<QSeries, QSeries> on_common_lattice(const QSeries& a, const QSeries& b) {
    long m = lcm_long(a.lattice_den(), b.lattice_den());
    return {a.rescaled(m / a.lattice_den()), b.rescaled(m / b.lattice_den())};
}

} // namespace

void QSeries::normalize() {
    size_t skip = 0;
    while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
    if (skip > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + skip);
        lead_ += static_cast<long>(skip);
    }
    if (exact_) {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        if (coeffs_.empty()) {
            n_ = 1;
            lead_ = 0;
        }
    }
}

QSeries QSeries::constant(const Rat& c) {
    if (c == 0) return zero();
    return QSeries(1, 0, {c}, true);
}

QSeries QSeries::monomial(const Rat& c, const Rat& e) {
    if (c == 0) return zero();
    long den = e.get_den().get_si();
    long num = e.get_num().get_si();
    return QSeries(den, num, {c}, true);
}

QSeries QSeries::rescaled(long factor) const {
    if (factor == 1) return *this;
    if (factor < 1) throw std::invalid_argument("rescale factor must be >= 1");
    if (coeffs_.empty()) {
        QSeries r = *this;
        r.n_ = exact_ ? 1 : n_ * factor;
        r.lead_ = exact_ ? 0 : lead_ * factor;
        return r;
    }
    long len = exact_ ? (prec_steps() - 1) * factor + 1 : prec_steps() * factor;
    std::vector<Rat> c(len);
    for (long i = 0; i < prec_steps(); ++i) c[i * factor] = coeffs_[i];
    return QSeries(n_ * factor, lead_ * factor, std::move(c), exact_);
}

QSeries QSeries::truncated(const Rat& f) const {
    Rat t = f * Rat(n_) - Rat(lead_);
    long len = ceil_long(t);
    if (len < 0) len = 0;
    if (!exact_ && len > prec_steps()) len = prec_steps();
    std::vector<Rat> c(coeffs_.begin(),
                       coeffs_.begin() + std::min<long>(len, prec_steps()));
    c.resize(len);
    return QSeries(n_, lead_, std::move(c), false);
}

std::pair<QSeries, QSeries> align(const QSeries& a, const QSeries& b) {
    auto [x, y] = on_common_lattice(a, b);
    auto fx = x.frontier();
    auto fy = y.frontier();
    if (fx && (!fy || *fx < *fy)) y = y.truncated(*fx);
    if (fy && (!fx || *fy < *fx)) x = x.truncated(*fy);
    return {x, y};
}

QSeries add(const QSeries& a, const QSeries& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto [x, y] = align(a, b);
    long n = x.lattice_den();
    bool exact = x.is_exact() && y.is_exact();
    long lo = std::min(x.lead(), y.lead());
    long hi = std::max(x.lead() + x.prec_steps(), y.lead() + y.prec_steps());
    std::vector<Rat> c(hi - lo);
    for (long i = 0; i < x.prec_steps(); ++i) c[x.lead() - lo + i] = x.coeffs()[i];
    for (long i = 0; i < y.prec_steps(); ++i) c[y.lead() - lo + i] += y.coeffs()[i];
    return QSeries(n, lo, std::move(c), exact);
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, scale(b, Rat(-1))); }

QSeries scale(const QSeries& a, const Rat& c) {
    if (c == 0 || a.is_zero()) return QSeries::zero();
    std::vector<Rat> v = a.coeffs();
    for (auto& x : v) x *= c;
    return QSeries(a.lattice_den(), a.lead(), std::move(v), a.is_exact());
}

QSeries mul(const QSeries& a, const QSeries& b) {
    if (a.is_zero() || b.is_zero()) return QSeries::zero();
    auto [x, y] = on_common_lattice(a, b);
    bool exact = x.is_exact() && y.is_exact();
    long la = x.prec_steps(), lb = y.prec_steps();
    if (la == 0 || lb == 0) {
        // no known coefficients; result is pure frontier information
        long len = exact ? 0 : std::min(x.is_exact() ? lb : la, y.is_exact() ? la : lb);
        return QSeries(x.lattice_den(), x.lead() + y.lead(), std::vector<Rat>(len), exact);
    }
    long lc;
    if (exact) {
        lc = la + lb - 1;
    } else {
        lc = std::min(x.is_exact() ? lb : la, y.is_exact() ? la : lb);
    }
    std::vector<Rat> c(lc);
    // skip zero coefficients; theta and eta series are sparse on fine lattices
    std::vector<long> ia, ib;
    for (long i = 0; i < la && i < lc; ++i)
        if (x.coeffs()[i] != 0) ia.push_back(i);
    for (long j = 0; j < lb && j < lc; ++j)
        if (y.coeffs()[j] != 0) ib.push_back(j);
    for (long i : ia)
        for (long j : ib) {
            if (i + j >= lc) break;
            c[i + j] += x.coeffs()[i] * y.coeffs()[j];
        }
    return QSeries(x.lattice_den(), x.lead() + y.lead(), std::move(c), exact);
}

QSeries pow_int(const QSeries& a, long m) {
    if (m < 0) throw std::invalid_argument("pow_int exponent must be nonnegative");
    if (m == 0) return QSeries::constant(1);
    QSeries base = a;
    QSeries acc = QSeries::constant(1);
    while (m > 0) {
        if (m & 1) acc = mul(acc, base);
        m >>= 1;
        if (m > 0) base = mul(base, base);
    }
    return acc;
}

QSeries recip(const QSeries& a, long prec_hint) {
    if (a.is_zero()) throw std::domain_error("non-invertible: zero series");
    long steps = a.is_exact() ? (prec_hint > 0 ? prec_hint : kDefaultExactPrec)
                              : a.prec_steps();
    if (a.prec_steps() == 0) throw std::domain_error("non-invertible: no known coefficients");
    const Rat& c0 = a.coeffs()[0];
    long g = support_gcd(a.coeffs());
    std::vector<Rat> out;
    bool exact = false;
    if (g == 0) {
        // pure monomial
        out.assign(a.is_exact() ? 1 : steps, Rat(0));
        out[0] = 1 / c0;
        exact = a.is_exact();
    } else {
        std::vector<Rat> u = compress(a.coeffs(), g, steps);
        for (auto& x : u) x /= c0;
        out = expand(vec_recip(u), g, steps);
        for (auto& x : out) x /= c0;
    }
    return QSeries(a.lattice_den(), -a.lead(), std::move(out), exact);
}

QSeries log_unit(const QSeries& a, long prec_hint) {
    if (a.is_zero() || a.leading_exponent() != 0 || a.coeffs()[0] != 1)
        throw std::invalid_argument(
            "log_unit requires constant term exactly 1, got leading term " +
            (a.is_zero() ? std::string("0") : format_rat(a.coeffs()[0])));
    long steps = a.is_exact() ? std::max(prec_hint > 0 ? prec_hint : kDefaultExactPrec,
                                         a.prec_steps())
                              : a.prec_steps();
    long g = support_gcd(a.coeffs());
    if (g == 0) {
        // log 1 = 0, known to the input's frontier
        return QSeries(a.lattice_den(), a.lead(),
                       std::vector<Rat>(a.is_exact() ? 0 : steps), a.is_exact());
    }
    std::vector<Rat> w = expand(vec_log(compress(a.coeffs(), g, steps)), g, steps);
    return QSeries(a.lattice_den(), 0, std::move(w), false);
}

QSeries exp_zero(const QSeries& a, long prec_hint) {
    if (a.is_zero()) return QSeries::constant(1);
    if (a.prec_steps() > 0 && a.leading_exponent() <= 0)
        throw std::invalid_argument("exp_zero requires positive leading exponent, got " +
                                    format_rat(a.leading_exponent()));
    // absolute slots [0, lead + L) relative to exponent 0
    long total = a.lead() + (a.is_exact()
                                 ? std::max(prec_hint > 0 ? prec_hint : kDefaultExactPrec,
                                            a.prec_steps())
                                 : a.prec_steps());
    std::vector<Rat> w(total);
    for (long i = 0; i < a.prec_steps() && a.lead() + i < total; ++i)
        w[a.lead() + i] = a.coeffs()[i];
    long g = support_gcd(w);
    if (g == 0) return QSeries::constant(1);
    std::vector<Rat> f = expand(vec_exp(compress(w, g, total)), g, total);
    return QSeries(a.lattice_den(), 0, std::move(f), false);
}

QSeries rational_pow(const QSeries& a, const Rat& r, long prec_hint) {
    if (a.is_zero()) {
        if (r > 0) return QSeries::zero();
        throw std::domain_error("rational_pow of zero series with nonpositive exponent");
    }
    if (a.prec_steps() == 0 || a.coeffs()[0] != 1)
        throw std::invalid_argument(
            "rational_pow requires unit part with constant term exactly 1");
    if (r == 0) return QSeries::constant(1);
    // split off q^{lead/N}
    QSeries unit(a.lattice_den(), 0, a.coeffs(), a.is_exact());
    QSeries w = scale(log_unit(unit, prec_hint), r);
    QSeries u = exp_zero(w, prec_hint);
    Rat shift = r * rat(a.lead(), a.lattice_den());
    long m = lcm_long(u.lattice_den(), shift.get_den().get_si());
    QSeries ur = u.rescaled(m / u.lattice_den());
    Rat lead_slots = shift * Rat(m);
    return QSeries(m, ur.lead() + lead_slots.get_num().get_si(), ur.coeffs(), ur.is_exact());
}

QSeries q_derivative(const QSeries& a) {
    if (a.is_zero()) return QSeries::zero();
    std::vector<Rat> c(a.prec_steps());
    for (long i = 0; i < a.prec_steps(); ++i)
        c[i] = a.coeffs()[i] * rat(a.lead() + i, a.lattice_den());
    return QSeries(a.lattice_den(), a.lead(), std::move(c), a.is_exact());
}

Rat coeff_at(const QSeries& a, const Rat& e) {
    auto f = a.frontier();
    if (f && e >= *f)
        throw std::runtime_error("insufficient precision: coefficient of q^" +
                                 format_rat(e) + " is beyond the frontier q^" +
                                 format_rat(*f));
    Rat t = e * Rat(a.lattice_den());
    if (!is_integer(t)) return Rat(0); // off-lattice
    long i = t.get_num().get_si() - a.lead();
    if (i < 0 || i >= a.prec_steps()) return Rat(0);
    return a.coeffs()[i];
}

bool eq_to_prec(const QSeries& a, const QSeries& b) {
    QSeries d = sub(a, b);
    for (const auto& c : d.coeffs())
        if (c != 0) return false;
    return true;
}

} // namespace mmf
