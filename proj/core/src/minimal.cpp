#include <mmf/minimal.hpp>

#include <numeric>

namespace mmf {

Rat central_charge(long P, long Q) {
    if (P < 2 || Q < 2 || std::gcd(P, Q) != 1)
        throw std::invalid_argument("minimal model needs coprime P, Q >= 2");
    long d = P - Q;
    return Rat(1) - rat(6 * d * d, P * Q);
}

Rat conformal_weight(long P, long Q, long r, long s) {
    if (r < 1 || r >= P || s < 1 || s >= Q)
        throw std::invalid_argument("Kac label out of range");
    long a = Q * r - P * s;
    long d = P - Q;
    return rat(a * a - d * d, 4 * P * Q);
}

std::pair<Rat, Rat> ceff_hmin(long P, long Q) {
    Rat h_min = 0;
    for (long r = 1; r < P; ++r)
        for (long s = 1; s < Q; ++s)
            h_min = std::min(h_min, conformal_weight(P, Q, r, s));
    Rat c_eff = central_charge(P, Q) - 24 * h_min;
    return {h_min, c_eff};
}

long n_level_closed(long p) {
    if (p < 5 || p % 2 == 0) throw std::invalid_argument("need odd p >= 5");
    long r = (p - 3) / 2;
    return 12 * (2 * r + 3) / (std::gcd(4L, r) * std::gcd(3L, r));
}

long n_level_oracle(long P, long Q) {
    Rat c24 = central_charge(P, Q) / 24;
    long n = 1;
    for (long r = 1; r < P; ++r)
        for (long s = 1; s < Q; ++s) {
            Rat e = conformal_weight(P, Q, r, s) - c24;
            n = lcm_long(n, e.get_den().get_si());
        }
    return n;
}

MinimalModelParams minimal_params(long P, long Q) {
    MinimalModelParams m;
    m.P = P;
    m.Q = Q;
    m.c = central_charge(P, Q);
    for (long r = 1; r < P; ++r)
        for (long s = 1; s < Q; ++s)
            m.h_table[{r, s}] = conformal_weight(P, Q, r, s);
    std::tie(m.h_min, m.c_eff) = ceff_hmin(P, Q);
    m.n_level = n_level_oracle(P, Q);
    return m;
}

QSeries character(long P, long Q, long r, long s, long prec) {
    if (prec < 1) throw std::invalid_argument("prec must be positive");
    Rat lead = conformal_weight(P, Q, r, s) - central_charge(P, Q) / 24;
    Rat target = lead + prec;
    long m = P * Q;
    // theta_{m,k}: exponents (2mn+k)^2/4m = m n^2 + k n + k^2/4m
    auto theta = [&](long k) {
        Rat theta_lead = (std::abs(k) <= m) ? rat(k * k, 4 * m) : Rat(0);
        long steps = ceil_long(target - theta_lead) + 2;
        return theta_ab(Rat(m), Rat(k), steps);
    };
    QSeries num = sub(theta(Q * r - P * s), theta(Q * r + P * s));
    long eta_steps = ceil_long(target) + 2;
    QSeries ch = mul(num, recip(eta(eta_steps)));
    return ch.truncated(target);
}

PhasedSeries ibukiyama(long p, long r, long prec) {
    if (p < 5 || p % 2 == 0 || r % 2 == 0 || r < 1 || r >= p)
        throw std::invalid_argument("need odd p >= 5 and odd 1 <= r < p");
    // leading exponent matches h_{1,s} - c/24 with r = p - 2s
    long s = (p - r) / 2;
    Rat lead = conformal_weight(2, p, 1, s) - central_charge(2, p) / 24;
    Rat target = lead + prec;
    long tc_steps = ceil_long(target - rat(r * r, 8 * p)) + 2;
    PhasedSeries tc = theta_constant(rat(r, 2 * p), rat(1, 2), p, tc_steps);
    long eta_steps = ceil_long(target + rat(3, 24 * p)) + 2;
    QSeries f = mul(tc.series, eta_pow(rat(-3, p), eta_steps));
    Phase phase = Phase::e(rat((p - 1) * (r - 1), 4 * p)) * tc.phase;
    return {phase, f.truncated(target)};
}

QSeries scaled_character(long p, long s, long prec) {
    Rat lead = conformal_weight(2, p, 1, s) - central_charge(2, p) / 24 + rat(p - 3, 24 * p);
    Rat target = lead + prec;
    QSeries ch = character(2, p, 1, s, prec + 2);
    long eta_steps = ceil_long(target) + 2;
    // c_eff = 1 - 3/p for the (2,p) series
    QSeries f = mul(eta_pow(rat(p - 3, p), eta_steps), ch);
    return f.truncated(target);
}

Phase scaled_character_phase(long p, long s) {
    return Phase::e(rat(2 * p * s - 1 + p - p * p, 4 * p));
}

namespace {

QSeries eval_expr(const CharExpr& expr, long prec) {
    QSeries acc = QSeries::zero();
    for (const auto& term : expr) {
        QSeries t = QSeries::constant(term.coeff);
        for (const auto& fac : term.factors)
            t = mul(t, pow_int(scaled_character(fac.p, fac.s, prec + 4), fac.power));
        acc = add(acc, t);
    }
    return acc;
}

CharTerm term(Rat coeff, std::vector<CharFactor> facs) {
    return {std::move(coeff), std::move(facs)};
}

} // namespace

bool verify_identity(const CharExpr& lhs, const CharExpr& rhs, long prec) {
    if (prec < 50) throw std::invalid_argument("identity checks need at least 50 steps");
    QSeries l = eval_expr(lhs, prec).truncated(Rat(prec));
    QSeries r = eval_expr(rhs, prec).truncated(Rat(prec));
    return eq_to_prec(l, r);
}

const std::vector<CharIdentity>& identities_5_15() {
    static const std::vector<CharIdentity> ids = [] {
        auto f = [](long s, long pow = 1) { return CharFactor{5, s, pow}; };
        auto g = [](long s, long pow = 1) { return CharFactor{15, s, pow}; };
        std::vector<CharIdentity> v;
        v.push_back({"f1^2 = g4 - g1",
                     {term(1, {f(1, 2)})},
                     {term(1, {g(4)}), term(-1, {g(1)})}});
        v.push_back({"f1 f2 = g5",
                     {term(1, {f(1), f(2)})},
                     {term(1, {g(5)})}});
        v.push_back({"f2^2 = g7 + g2",
                     {term(1, {f(2, 2)})},
                     {term(1, {g(7)}), term(1, {g(2)})}});
        return v;
    }();
    return ids;
}

const std::vector<CharIdentity>& identities_7_21() {
    static const std::vector<CharIdentity> ids = [] {
        auto f = [](long s, long pow = 1) { return CharFactor{7, s, pow}; };
        auto g = [](long s, long pow = 1) { return CharFactor{21, s, pow}; };
        std::vector<CharIdentity> v;
        v.push_back({"f3^3 = g10^2 + 2 g10 g4 - g7 g5 + g4^2 + g7 g2",
                     {term(1, {f(3, 3)})},
                     {term(1, {g(10, 2)}), term(2, {g(10), g(4)}), term(-1, {g(7), g(5)}),
                      term(1, {g(4, 2)}), term(1, {g(7), g(2)})}});
        v.push_back({"f3^2 f2 = g10 g8 + g10 g1 + g8 g4 + g4 g1",
                     {term(1, {f(3, 2), f(2)})},
                     {term(1, {g(10), g(8)}), term(1, {g(10), g(1)}), term(1, {g(8), g(4)}),
                      term(1, {g(4), g(1)})}});
        v.push_back({"f3^2 f1 = g8 g7 + g7 g1",
                     {term(1, {f(3, 2), f(1)})},
                     {term(1, {g(8), g(7)}), term(1, {g(7), g(1)})}});
        v.push_back({"f2^3 = g8 g7 + g7 g1 + g5^2 - 2 g5 g2 + g2^2",
                     {term(1, {f(2, 3)})},
                     {term(1, {g(8), g(7)}), term(1, {g(7), g(1)}), term(1, {g(5, 2)}),
                      term(-2, {g(5), g(2)}), term(1, {g(2, 2)})}});
        v.push_back({"f2^2 f3 = g10 g7 + g7 g4",
                     {term(1, {f(2, 2), f(3)})},
                     {term(1, {g(10), g(7)}), term(1, {g(7), g(4)})}});
        v.push_back({"f2^2 f1 = g10 g5 - g10 g2 + g5 g4 - g4 g2",
                     {term(1, {f(2, 2), f(1)})},
                     {term(1, {g(10), g(5)}), term(-1, {g(10), g(2)}), term(1, {g(5), g(4)}),
                      term(-1, {g(4), g(2)})}});
        v.push_back({"f1^3 = g10 g7 - g8^2 - 2 g8 g1 + g7 g4 - g1^2",
                     {term(1, {f(1, 3)})},
                     {term(1, {g(10), g(7)}), term(-1, {g(8, 2)}), term(-2, {g(8), g(1)}),
                      term(1, {g(7), g(4)}), term(-1, {g(1, 2)})}});
        v.push_back({"f1^2 f3 = g8 g5 - g8 g2 + g5 g1 - g2 g1",
                     {term(1, {f(1, 2), f(3)})},
                     {term(1, {g(8), g(5)}), term(-1, {g(8), g(2)}), term(1, {g(5), g(1)}),
                      term(-1, {g(2), g(1)})}});
        v.push_back({"f1^2 f2 = g7 g5 - g7 g2",
                     {term(1, {f(1, 2), f(2)})},
                     {term(1, {g(7), g(5)}), term(-1, {g(7), g(2)})}});
        v.push_back({"f3 f2 f1 = g7^2",
                     {term(1, {f(3), f(2), f(1)})},
                     {term(1, {g(7, 2)})}});
        return v;
    }();
    return ids;
}

} // namespace mmf
