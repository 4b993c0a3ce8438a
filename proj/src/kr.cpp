#include "hilbzeta/kr.hpp"

#include <algorithm>
#include <numeric>

namespace hilbzeta {

namespace {

int count_ones(const std::string& s) {
    return static_cast<int>(std::count(s.begin(), s.end(), '1'));
}

void check_bits(const std::string& s) {
    for (char c : s)
        if (c != '0' && c != '1')
            throw std::invalid_argument("binary string must consist of 0/1");
}

// ((1+a)/(1-Q))^n truncated: Q^j coefficient is binom(n-1+j, j) (1+a)^n
QSeries geom_pow(int n, int nmax) {
    QSeries s(nmax);
    if (n == 0) {
        s.set_coeff(0, LaurentPoly::one());
        return s;
    }
    LaurentPoly a_pow =
        (LaurentPoly::one() + LaurentPoly::term(1, 0, 0, 1)).pow(n);
    Int binom = 1;
    for (int j = 0; j <= nmax; ++j) {
        if (j > 0) {
            binom *= n - 1 + j;
            binom /= j;
        }
        LaurentPoly c;
        for (const auto& [m, cf] : a_pow.terms()) c.add_term(m, cf * binom);
        s.set_coeff(j, std::move(c));
    }
    return s;
}

}  // namespace

BinaryPair::BinaryPair(std::string t_, std::string w_)
    : t(std::move(t_)), w(std::move(w_)) {
    check_bits(t);
    check_bits(w);
    if (count_ones(t) != count_ones(w))
        throw std::domain_error("BinaryPair: unequal 1-counts");
}

int BinaryPair::ones() const { return count_ones(t); }

TorusLinkSpec TorusLinkSpec::make(int mA, int mB, int color_v) {
    if (mA < 1 || mB < 1 || color_v < 1)
        throw std::domain_error("TorusLinkSpec: positive parameters required");
    return TorusLinkSpec{mA, mB, std::gcd(mA, mB), color_v};
}

BinaryPair TorusLinkSpec::strings() const {
    auto zeros = [&](int m) {
        return (m / d) * (d - 1) + color_v * (m / d - 1);
    };
    std::string ones(color_v, '1');
    return BinaryPair(ones + std::string(zeros(mA), '0'),
                      ones + std::string(zeros(mB), '0'));
}

KrEngine::KrEngine(int nmax) : nmax_(nmax) {
    if (nmax < 0) throw std::domain_error("KrEngine: negative truncation");
}

void KrEngine::explore(const State& root) {
    std::vector<State> stack{root};
    while (!stack.empty()) {
        State s = std::move(stack.back());
        stack.pop_back();
        if (rules_.count(s)) continue;
        const std::string& t = s.first;
        const std::string& w = s.second;
        Rule r;
        if (t.empty() || w.empty()) {
            if (count_ones(t) + count_ones(w) != 0)
                throw std::logic_error("kr state hit rule (1) with 1s remaining");
            r.kind = Rule::Geom;
            r.n = static_cast<int>(t.size() + w.size());
        } else {
            char bt = t.back(), bw = w.back();
            std::string t0 = t.substr(0, t.size() - 1);
            std::string w0 = w.substr(0, w.size() - 1);
            if (bt == '1' && bw == '1') {
                r.kind = Rule::Unary;
                r.coeff = LaurentPoly::term(1, 0, count_ones(t0)) +
                          LaurentPoly::term(1, 0, 0, 1);
                r.next1 = {t0, w0};
            } else if (bt == '0' && bw == '1') {
                r.kind = Rule::Unary;
                r.coeff = LaurentPoly::one();
                r.next1 = {t0, "1" + w0};
            } else if (bt == '1' && bw == '0') {
                r.kind = Rule::Unary;
                r.coeff = LaurentPoly::one();
                r.next1 = {"1" + t0, w0};
            } else {
                r.kind = Rule::Rule3;
                r.l = count_ones(t0);
                r.next1 = {"1" + t0, "1" + w0};
                r.next2 = {"0" + t0, "0" + w0};
            }
        }
        if (r.kind != Rule::Geom) {
            stack.push_back(r.next1);
            if (r.kind == Rule::Rule3) stack.push_back(r.next2);
        }
        rules_.emplace(std::move(s), std::move(r));
    }
}

void KrEngine::solve() {
    for (const auto& [s, r] : rules_)
        if (!values_.count(s))
            values_.emplace(s, r.kind == Rule::Geom ? geom_pow(r.n, nmax_)
                                                    : QSeries(nmax_));
    // every cycle in the rule graph goes through rule-3 rotation edges,
    // each carrying a factor Q, so each sweep is a Q-adic contraction;
    // the bound below is generous, overrunning it means a Q-free cycle
    long cap = static_cast<long>(rules_.size()) * (nmax_ + 2) + 16;
    for (long round = 0; round < cap; ++round) {
        bool changed = false;
        for (const auto& [s, r] : rules_) {
            if (r.kind == Rule::Geom) continue;
            QSeries next(nmax_);
            if (r.kind == Rule::Unary) {
                const QSeries& v = values_.at(r.next1);
                for (int n = 0; n <= nmax_; ++n)
                    next.set_coeff(n, r.coeff * v.coeff(n));
            } else {
                const QSeries& v1 = values_.at(r.next1);
                const QSeries& v2 = values_.at(r.next2);
                LaurentPoly tshift = LaurentPoly::term(1, 0, -r.l);
                for (int n = 0; n <= nmax_; ++n) {
                    LaurentPoly c = v1.coeff(n);
                    if (n > 0) c += v2.coeff(n - 1);
                    next.set_coeff(n, tshift * c);
                }
            }
            QSeries& slot = values_.at(s);
            if (slot != next) {
                slot = std::move(next);
                changed = true;
            }
        }
        if (!changed) {
            converged_ = true;
            return;
        }
    }
    throw std::logic_error("kr recursion failed to converge: rewrite cycle without Q factor");
}

KRValue KrEngine::value(const BinaryPair& pair, bool set_a_zero) {
    State s{pair.t, pair.w};
    if (!rules_.count(s) || !converged_) {
        explore(s);
        converged_ = false;
        solve();
    }
    const QSeries& v = values_.at(s);
    return set_a_zero ? specialize(v, Variable::A, 0) : v;
}

std::vector<BinaryPair> KrEngine::reachable_states() const {
    std::vector<BinaryPair> out;
    out.reserve(rules_.size());
    for (const auto& [s, r] : rules_) out.emplace_back(s.first, s.second);
    return out;
}

KRValue kr_p(const BinaryPair& pair, int nmax, bool set_a_zero) {
    KrEngine engine(nmax);
    return engine.value(pair, set_a_zero);
}

KRValue kr_torus_link(const TorusLinkSpec& spec, int nmax, bool set_a_zero) {
    KRValue p = kr_p(spec.strings(), nmax, set_a_zero);
    for (int i = 1; i <= spec.color_v; ++i) {
        QSeries g(nmax);
        for (int j = 0; j <= nmax; ++j)
            g.set_coeff(j, LaurentPoly::term(1, 0, (1 - i) * j));
        p = p * g;
    }
    return p;
}

FactoredRational cf_hopf_closed(int v) {
    if (v < 1) throw std::domain_error("cf_hopf_closed: v >= 1 required");
    LaurentPoly num = LaurentPoly::one() - LaurentPoly::term(1, 1, 0) +
                      LaurentPoly::term(1, 1, -v);
    std::vector<Factor> den{Factor{1, 0}};
    for (int i = 1; i <= v; ++i) den.push_back(Factor{1, 1 - i});
    return FactoredRational(std::move(num), std::move(den));
}

KRValue strip_monomial(const KRValue& x, int v) {
    if (v < 1) throw std::domain_error("strip_monomial: v >= 1 required");
    int shift = v * (v - 1) / 2;
    LaurentPoly head = specialize(x.coeff(0), Variable::A, 0);
    if (head != LaurentPoly::term(1, 0, shift))
        throw std::domain_error(
            "strip_monomial: input does not carry the factor T^{v(v-1)/2}");
    QSeries out(x.nmax());
    for (int n = 0; n <= x.nmax(); ++n)
        out.set_coeff(n, x.coeff(n).shifted(0, -shift));
    return out;
}

}  // namespace hilbzeta
