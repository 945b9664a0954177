#pragma once

#include <mmf/rational.hpp>
#include <mmf/phase.hpp>
#include <optional>
#include <utility>
#include <vector>

namespace mmf {

// Truncated formal series in q on a fractional exponent lattice (1/N)*Z with
// exact rational coefficients. coeffs[i] is the coefficient of
// q^{(lead+i)/N}; the series is known modulo q^{(lead+prec_steps)/N}.
//
// An "exact" series has no truncation frontier: all coefficients beyond the
// stored range are exactly zero (constants, monomials, and anything built
// from them by ring operations). The zero series is the canonical exact
// series with empty coeffs, N = 1, lead = 0.
//
// Values are immutable after construction; all operations are pure.
class QSeries {
public:
    QSeries() : n_(1), lead_(0), exact_(true) {}

    QSeries(long lattice_den, long lead, std::vector<Rat> coeffs, bool exact = false)
        : n_(lattice_den), lead_(lead), coeffs_(std::move(coeffs)), exact_(exact) {
        if (n_ < 1) throw std::invalid_argument("lattice_den must be positive");
        normalize();
    }

    static QSeries zero() { return QSeries(); }
    static QSeries constant(const Rat& c);
    // c * q^e, known exactly.
    static QSeries monomial(const Rat& c, const Rat& e);

    long lattice_den() const { return n_; }
    long lead() const { return lead_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    long prec_steps() const { return static_cast<long>(coeffs_.size()); }
    bool is_exact() const { return exact_; }
    bool is_zero() const { return coeffs_.empty() && exact_; }

    // Exponent of coeffs[i] as an exact rational.
    Rat exponent_at(long i) const { return rat(lead_ + i, n_); }

    // Leading exponent; series must be nonzero.
    Rat leading_exponent() const {
        if (coeffs_.empty()) throw std::domain_error("zero series has no leading exponent");
        return rat(lead_, n_);
    }

    // First unknown exponent, or nullopt for exact series.
    std::optional<Rat> frontier() const {
        if (exact_) return std::nullopt;
        return rat(lead_ + prec_steps(), n_);
    }

    // Same formal series on lattice m*N (m >= 1), coefficients interleaved
    // with zeros.
    QSeries rescaled(long factor) const;

    // Restrict the known range to exponents < f. Turns an exact series into
    // a truncated one.
    QSeries truncated(const Rat& f) const;

    bool operator==(const QSeries& o) const {
        return n_ == o.n_ && lead_ == o.lead_ && exact_ == o.exact_ && coeffs_ == o.coeffs_;
    }

private:
    void normalize();

    long n_;
    long lead_;
    std::vector<Rat> coeffs_;
    bool exact_;
};

// Puts both series on the lcm lattice and the shared precision frontier.
std::pair<QSeries, QSeries> align(const QSeries& a, const QSeries& b);

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Rat& c);
QSeries pow_int(const QSeries& a, long m);

// Multiplicative inverse. For exact inputs that do not invert exactly the
// result is truncated to prec_hint lattice steps (default 64).
QSeries recip(const QSeries& a, long prec_hint = 0);

// Formal log of a unit series with constant term exactly 1.
QSeries log_unit(const QSeries& a, long prec_hint = 0);
// Formal exp of a series with strictly positive leading exponent.
QSeries exp_zero(const QSeries& a, long prec_hint = 0);

// a^r for rational r; a must be q^e * u with u a unit series with constant
// term exactly 1.
QSeries rational_pow(const QSeries& a, const Rat& r, long prec_hint = 0);

// q d/dq: multiplies the coefficient of q^e by e.
QSeries q_derivative(const QSeries& a);

// Exact coefficient of q^e; throws if e is at or beyond the frontier.
Rat coeff_at(const QSeries& a, const Rat& e);

// Equality of the represented series up to the shared precision frontier.
bool eq_to_prec(const QSeries& a, const QSeries& b);

// e(alpha) * f(q) with f real-rational.
struct PhasedSeries {
    Phase phase;
    QSeries series;
};

} // namespace mmf
