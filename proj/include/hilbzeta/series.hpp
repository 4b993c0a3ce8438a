#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbzeta {

using Int = boost::multiprecision::cpp_int;

/* Exact arithmetic in Z[Q, T, T^-1, a]: Q records the number of points of
 * the Hilbert scheme, T the homological degree (complex dimension d shows
 * up as T^{2d}), and a is the extra grading variable of the link homology.
 * Q and a exponents stay nonnegative; T is Laurent. */

struct Monomial {
    int q = 0;
    int t = 0;
    int a = 0;

    Monomial() = default;
    Monomial(int q_, int t_, int a_ = 0) : q(q_), t(t_), a(a_) {
        if (q < 0) throw std::domain_error("Monomial: negative Q exponent");
        if (a < 0) throw std::domain_error("Monomial: negative a exponent");
    }

    auto operator<=>(const Monomial&) const = default;
};

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(long c) { return term(Int(c), 0, 0, 0); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly term(Int coeff, int q, int t = 0, int a = 0) {
        LaurentPoly p;
        p.add_term(Monomial(q, t, a), std::move(coeff));
        return p;
    }
    // 1 - Q^alpha T^beta, the building block of every denominator
    static LaurentPoly one_minus(int alpha, int beta) {
        LaurentPoly p = one();
        p.add_term(Monomial(alpha, beta), -1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }
    void add_term(const Monomial& m, Int coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    LaurentPoly operator-() const {
        LaurentPoly p;
        for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
        return p;
    }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        return lhs.mul(rhs, std::nullopt);
    }
    LaurentPoly& operator*=(const LaurentPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    // product dropping all terms with Q-exponent above q_max
    LaurentPoly mul_truncated(const LaurentPoly& rhs, int q_max) const {
        return mul(rhs, q_max);
    }

    LaurentPoly pow(int n) const {
        if (n < 0) throw std::domain_error("LaurentPoly::pow: negative exponent");
        LaurentPoly r = one();
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    // multiply by the monomial Q^dq T^dt a^da (Monomial ctor rejects
    // shifts that would drive Q or a exponents negative)
    LaurentPoly shifted(int dq, int dt, int da = 0) const {
        LaurentPoly p;
        for (const auto& [m, c] : terms_)
            p.terms_.emplace(Monomial(m.q + dq, m.t + dt, m.a + da), c);
        return p;
    }

    LaurentPoly truncate_q(int nmax) const {
        LaurentPoly p;
        for (const auto& [m, c] : terms_)
            if (m.q <= nmax) p.terms_.emplace(m, c);
        return p;
    }
    LaurentPoly truncate_total(int m_max) const {
        LaurentPoly p;
        for (const auto& [m, c] : terms_)
            if (m.q + m.t <= m_max) p.terms_.emplace(m, c);
        return p;
    }

    int min_t() const;
    int max_q() const;

    bool operator==(const LaurentPoly&) const = default;

    std::string str() const;   // "1 - Q + Q^2*T^2", terms ascending (Q,T,a)
    std::string json() const;  // {"terms":[[q,t,a,"coeff"],...]}

private:
    LaurentPoly mul(const LaurentPoly& rhs, std::optional<int> q_max) const;

    std::map<Monomial, Int> terms_;
};

enum class Variable { T, A };

// exact substitution T=0/1 or a=0/1; T=0 is rejected when Laurent terms
// in T are present
LaurentPoly specialize(const LaurentPoly& p, Variable var, int value);

/* Power series in Q truncated at a stated Q-degree; coefficients are
 * Laurent in T and polynomial in a. Sums and products carry the smaller
 * of the two truncation degrees. For series of virtual Poincare
 * polynomials the Q^n coefficient has T-exponents within [0, 2n]. */
class QSeries {
public:
    explicit QSeries(int nmax) : coeffs_(check_nmax(nmax) + 1) {}

    static QSeries from_poly(const LaurentPoly& p, int nmax);

    int nmax() const { return static_cast<int>(coeffs_.size()) - 1; }
    const LaurentPoly& coeff(int n) const { return coeffs_.at(n); }
    void set_coeff(int n, LaurentPoly p);
    bool is_zero() const;

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
    friend QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
    friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);

    QSeries truncated(int nmax) const;
    LaurentPoly to_poly() const;

    // least Q-degree <= upto where the two series differ
    std::optional<int> first_divergence(const QSeries& other, int upto) const;

    bool operator==(const QSeries&) const = default;

    std::string json() const;  // {"nmax":N,"coeffs":[[n,[[t,"c"],...]],...]}

private:
    static int check_nmax(int nmax) {
        if (nmax < 0) throw std::domain_error("QSeries: negative truncation degree");
        return nmax;
    }
    std::vector<LaurentPoly> coeffs_;
};

QSeries specialize(const QSeries& s, Variable var, int value);

// change of variables T -> (QT^2)^{-1} on a series: Q^x T^y -> Q^{x-y} T^{-2y}.
// Sound under truncation only when every T-exponent is <= 0 (then source
// degree <= target degree), which is the case for the link homology values
// this is applied to; other inputs are rejected.
QSeries qseries_substitute_T(const QSeries& s, int out_nmax);

// one factor 1 - Q^alpha T^beta of a denominator, alpha >= 1
struct Factor {
    int alpha = 1;
    int beta = 0;
    auto operator<=>(const Factor&) const = default;
};

/* numerator / prod (1 - Q^alpha T^beta); kept factored, never divided out.
 * Expansion is per-factor geometric: (1-Q^a T^b)^{-1} = sum_j Q^{aj} T^{bj},
 * well defined in the Q-adic topology because alpha >= 1. */
class FactoredRational {
public:
    FactoredRational() : num_(LaurentPoly::one()) {}
    FactoredRational(LaurentPoly num, std::vector<Factor> den);

    const LaurentPoly& numerator() const { return num_; }
    const std::vector<Factor>& denominator() const { return den_; }

    friend FactoredRational operator*(const FactoredRational& lhs,
                                      const FactoredRational& rhs);

    QSeries to_series(int nmax) const;

    // the Macaulay2-style truncation: everything of total degree q+t <= m;
    // requires beta >= 0 on all factors and a numerator with t >= 0
    LaurentPoly to_polynomial_total_degree(int m) const;

    // T -> (QT^2)^{-1}: Q^x T^y -> Q^{x-y} T^{-2y} on the numerator and
    // (1-Q^a T^b) -> (1-Q^{a-b} T^{-2b}) on each factor; requires
    // alpha-beta >= 1 per factor and a nonnegative image Q-exponent
    FactoredRational substitute_T() const;

    LaurentPoly denominator_expanded() const;

    bool operator==(const FactoredRational&) const = default;

private:
    LaurentPoly num_;
    std::vector<Factor> den_;  // kept sorted; multiset semantics
};

}  // namespace hilbzeta
