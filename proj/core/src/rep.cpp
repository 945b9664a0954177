#include <mmf/rep.hpp>

#include <cmath>
#include <numbers>

namespace mmf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Cplx unit_e(double alpha) { return {std::cos(kTwoPi * alpha), std::sin(kTwoPi * alpha)}; }

void require_rep_basis(long p) {
    if (p < 5 || p % 2 == 0) throw std::invalid_argument("need odd p >= 5");
}

// connecting phase between the scaled characters and the f_r basis
Phase theta_phase(long p, long s) { return scaled_character_phase(p, s); }

} // namespace

std::vector<Phase> t_phases(long p) {
    require_rep_basis(p);
    std::vector<Phase> out;
    for (long s = 1; s <= (p - 1) / 2; ++s) {
        long r = p - 2 * s;
        out.push_back(Phase::e(rat(r * r - p * p, 8 * p)));
    }
    return out;
}

RepMatrix t_matrix(long p) {
    auto ph = t_phases(p);
    long d = static_cast<long>(ph.size());
    RepMatrix M{p, d, std::vector<std::vector<Cplx>>(d, std::vector<Cplx>(d, 0)), "T"};
    for (long i = 0; i < d; ++i) M.entries[i][i] = ph[i].value();
    return M;
}

RepMatrix s_matrix(long p) {
    require_rep_basis(p);
    long d = (p - 1) / 2;
    double sq = 1.0 / std::sqrt(static_cast<double>(p));
    double sign = (((p + 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    RepMatrix M{p, d, std::vector<std::vector<Cplx>>(d, std::vector<Cplx>(d, 0)), "S"};
    for (long i = 0; i < d; ++i) {
        long ri = p - 2 * (i + 1);
        for (long j = 0; j < d; ++j) {
            long rj = p - 2 * (j + 1);
            double arg = (ri - rj) / 4.0 + static_cast<double>(ri) * rj / (4.0 * p) +
                         (3.0 * p - 1.0) / 8.0;
            Cplx bracket = unit_e(arg) + sign * unit_e(-arg);
            Phase conj = theta_phase(p, i + 1) * theta_phase(p, j + 1).inverse();
            M.entries[i][j] = conj.value() * sq * bracket;
        }
    }
    return M;
}

RepMatrix rep_mul(const RepMatrix& A, const RepMatrix& B) {
    if (A.size != B.size) throw std::invalid_argument("size mismatch");
    long d = A.size;
    RepMatrix C{A.p, d, std::vector<std::vector<Cplx>>(d, std::vector<Cplx>(d, 0)), "derived"};
    for (long i = 0; i < d; ++i)
        for (long k = 0; k < d; ++k)
            for (long j = 0; j < d; ++j) C.entries[i][j] += A.entries[i][k] * B.entries[k][j];
    return C;
}

RepMatrix sym_power(const RepMatrix& M, long m) {
    if (M.size != 2) throw std::invalid_argument("sym_power needs a 2x2 matrix");
    if (m < 0) throw std::invalid_argument("power must be nonnegative");
    long d = m + 1;
    RepMatrix out{M.p, d, std::vector<std::vector<Cplx>>(d, std::vector<Cplx>(d, 0)), "derived"};
    // row l: expand (M00 x1 + M01 x2)^{m-l} (M10 x1 + M11 x2)^l over the
    // monomials x1^{m-j} x2^j; coefficient vector indexed by the power of x2
    for (long l = 0; l <= m; ++l) {
        std::vector<Cplx> poly = {Cplx(1, 0)};
        auto times_linear = [&](Cplx cx1, Cplx cx2) {
            std::vector<Cplx> next(poly.size() + 1, 0);
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i] += cx1 * poly[i];
                next[i + 1] += cx2 * poly[i];
            }
            poly = std::move(next);
        };
        for (long t = 0; t < m - l; ++t) times_linear(M.entries[0][0], M.entries[0][1]);
        for (long t = 0; t < l; ++t) times_linear(M.entries[1][0], M.entries[1][1]);
        for (long j = 0; j <= m; ++j) out.entries[l][j] = poly[j];
    }
    return out;
}

EvalResult eval_series(const QSeries& f, Cplx tau, double tol) {
    if (tau.imag() <= 0) throw std::invalid_argument("need Im(tau) > 0");
    if (f.is_zero()) return {0.0, 0.0};
    long n = f.lattice_den();
    Cplx step = std::exp(Cplx(0, kTwoPi) * tau / static_cast<double>(n));
    Cplx term = std::exp(Cplx(0, kTwoPi) * tau * static_cast<double>(f.lead()) /
                         static_cast<double>(n));
    Cplx sum = 0;
    const auto& c = f.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) sum += c[i].get_d() * term;
        term *= step;
    }
    if (f.is_exact()) return {sum, 0.0};

    // geometric tail estimate: extrapolate recent coefficient growth
    double absq = std::abs(step);
    long last = -1, first = -1;
    for (long i = static_cast<long>(c.size()) - 1; i >= 0; --i)
        if (c[i] != 0) {
            if (last < 0) last = i;
            first = i;
            if (last - i > 40) break;
        }
    double growth = 1.0;
    if (last > first && last >= 0) {
        double ratio = std::abs(c[last].get_d()) / std::max(std::abs(c[first].get_d()), 1e-300);
        growth = std::max(1.0, std::pow(ratio, 1.0 / (last - first)));
    }
    double rho = growth * absq;
    double mag = last >= 0 ? std::abs(c[last].get_d()) *
                                 std::pow(absq, static_cast<double>(f.lead() + last))
                           : 0.0;
    if (rho >= 0.999) throw std::runtime_error("increase precision");
    double tail = mag * rho * std::pow(rho, static_cast<double>(c.size()) - 1 - last) /
                  (1.0 - rho);
    if (tail > tol) throw std::runtime_error("increase precision");
    return {sum, tail};
}

EvalResult eval_series(const PhasedSeries& f, Cplx tau, double tol) {
    EvalResult r = eval_series(f.series, tau, tol);
    r.value *= f.phase.value();
    return r;
}

std::pair<AutomorphyConstant, AutomorphyConstant> extract_multiplier(long p, long prec) {
    require_rep_basis(p);
    Rat weight = rat(p - 3, 2 * p);
    AutomorphyConstant vt{"T", p, 0, weight, Phase::e(rat(p * p - 1, 8 * p))};
    vt.value = vt.exact->value();

    QSeries e3p = eta_pow(rat(3, p), prec);
    double w0 = 3.0 / (2.0 * p);
    auto v0_at = [&](Cplx tau) {
        Cplx num = eval_series(e3p, Cplx(-1, 0) / tau).value;
        Cplx den = eval_series(e3p, tau).value * std::pow(tau, Cplx(w0, 0));
        return num / den;
    };
    auto vp_at = [&](Cplx tau) {
        return std::pow(v0_at(tau), Cplx(static_cast<double>(p * p - 1), 0));
    };
    Cplx v1 = vp_at(Cplx(0, 1.2));
    Cplx v2 = vp_at(Cplx(0.3, 1.4));
    if (std::abs(v1 - v2) > 1e-8) throw std::runtime_error("branch inconsistency");
    AutomorphyConstant vs{"S", p, v1, weight, std::nullopt};
    return {vs, vt};
}

TransformReport check_transformation(long p, const std::string& gamma, Cplx tau, long prec,
                                     double tol) {
    require_rep_basis(p);
    long d = (p - 1) / 2;
    TransformReport rep{p, "transform" + gamma, 0.0, tol, false};
    if (gamma == "T") {
        // all exponents of f_s sit in lambda_s + Z, so tau -> tau+1 is the
        // exact global phase e(lambda_s); compare with v_p(T) * pi_p(T)
        Phase vpt = Phase::e(rat(p * p - 1, 8 * p));
        auto phases = t_phases(p);
        bool ok = true;
        for (long s = 1; s <= d; ++s) {
            Rat lam = conformal_weight(2, p, 1, s) - central_charge(2, p) / 24 +
                      rat(p - 3, 24 * p);
            if (Phase::e(lam) != vpt * phases[s - 1]) ok = false;
        }
        rep.max_abs_dev = ok ? 0.0 : 1.0;
        rep.pass = ok;
        return rep;
    }
    if (gamma != "S") throw std::invalid_argument("gamma must be S or T");

    RepMatrix S = s_matrix(p);
    Cplx vps = extract_multiplier(p, prec).first.value;
    Cplx jp = vps * std::pow(tau, Cplx((p - 3.0) / (2.0 * p), 0));
    std::vector<Cplx> f_tau(d), f_stau(d);
    for (long s = 1; s <= d; ++s) {
        QSeries f = scaled_character(p, s, prec);
        f_tau[s - 1] = eval_series(f, tau, tol / 10).value;
        f_stau[s - 1] = eval_series(f, Cplx(-1, 0) / tau, tol / 10).value;
    }
    double dev = 0;
    for (long i = 0; i < d; ++i) {
        Cplx pred = 0;
        for (long j = 0; j < d; ++j) pred += S.entries[i][j] * f_tau[j];
        dev = std::max(dev, std::abs(f_stau[i] - jp * pred));
    }
    rep.max_abs_dev = dev;
    rep.pass = dev < tol;
    return rep;
}

VvmfSym5 vvmf_sym5(const Rat& k, long prec) {
    Rat m_rat = 5 * k;
    if (!is_integer(m_rat) || m_rat <= 0)
        throw std::invalid_argument("k must be a positive multiple of 1/5");
    long m = m_rat.get_num().get_si();
    QSeries f1 = scaled_character(5, 1, prec + 2);
    QSeries f2 = scaled_character(5, 2, prec + 2);
    VvmfSym5 out;
    out.k = k;
    out.exponent_check = true;
    for (long l = 0; l <= m; ++l) {
        QSeries comp = mul(pow_int(f2, m - l), pow_int(f1, l));
        if (comp.leading_exponent() != rat(l, 5)) out.exponent_check = false;
        out.components.push_back(comp.truncated(rat(l, 5) + prec));
    }
    out.mlde = fit_mlde(k, out.components, m + 1);
    return out;
}

} // namespace mmf
