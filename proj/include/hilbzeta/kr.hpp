#pragma once

#include "hilbzeta/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hilbzeta {

/* Row-colored Khovanov-Rozansky Poincare polynomials of torus links via
 * the Hogancamp-Mellit binary-string recursion. States are pairs of bit
 * strings with equal 1-counts; the rewrite rules act on the last bits:
 *
 *   (1)  p(empty, 0^n) = ((1+a)/(1-Q))^n   (and symmetrically)
 *   (2)  p(t1, w1) = (T^l + a) p(t, w),  l = |t|_1
 *   (3)  p(t0, w0) = T^{-l} p(1t, 1w) + Q T^{-l} p(0t, 0w)
 *   (4)  p(t0, w1) = p(t, 1w)
 *   (5)  p(t1, w0) = p(1t, w)
 *
 * Rule (3)'s second branch is a rotation, so the state graph is cyclic;
 * every cycle consists of such rotations and carries a factor Q per edge,
 * which makes Q-adic fixed-point iteration converge. Values are Q-series
 * with coefficients Laurent in T and polynomial in a. */

using KRValue = QSeries;

struct BinaryPair {
    std::string t;  // most-significant-first; "t1" appends at the right
    std::string w;

    BinaryPair(std::string t_, std::string w_);
    int ones() const;  // the common 1-count l
};

struct TorusLinkSpec {
    int mA = 2;
    int mB = 2;
    int d = 2;  // gcd(mA, mB)
    int color_v = 1;

    static TorusLinkSpec make(int mA, int mB, int color_v);
    // (1^v 0^{(mA/d)(d-1) + v((mA/d)-1)},  same with mB)
    BinaryPair strings() const;
};

// memoizing solver; one instance is pinned to a truncation degree, and its
// state values are computed once and then read-only
class KrEngine {
public:
    explicit KrEngine(int nmax);

    // value of p(t, w); a is carried exactly, set_a_zero specializes the
    // finished series (no separate code path)
    KRValue value(const BinaryPair& pair, bool set_a_zero);

    // states visited while solving for everything requested so far
    std::vector<BinaryPair> reachable_states() const;

    int nmax() const { return nmax_; }

private:
    using State = std::pair<std::string, std::string>;
    struct Rule {
        enum Kind { Geom, Unary, Rule3 } kind = Geom;
        int n = 0;           // Geom: ((1+a)/(1-Q))^n
        LaurentPoly coeff;   // Unary: value = coeff * value(next1)
        State next1, next2;  // Rule3: value = T^{-l}(value(next1) + Q value(next2))
        int l = 0;
    };

    void explore(const State& root);
    void solve();

    int nmax_;
    std::map<State, Rule> rules_;
    std::map<State, QSeries> values_;
    bool converged_ = false;
};

KRValue kr_p(const BinaryPair& pair, int nmax, bool set_a_zero);

// prod_{i=1}^{v} 1/(1 - Q T^{1-i}) * p(strings of the link), per the
// Hogancamp-Mellit/Conners evaluation
KRValue kr_torus_link(const TorusLinkSpec& spec, int nmax, bool set_a_zero = true);

// (1 + Q T^{-v} / (1-Q)) prod_{i=1}^{v} 1/(1 - Q T^{1-i}), the Hopf-link
// value already normalized by the monomial prod_{i=1}^{v-1} T^i
FactoredRational cf_hopf_closed(int v);

// divide by T^{v(v-1)/2}; the a = 0 part of the Q^0 coefficient must be
// exactly that monomial, else the input does not carry the factor
KRValue strip_monomial(const KRValue& x, int v);

}  // namespace hilbzeta
