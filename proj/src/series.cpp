#include "hilbzeta/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hilbzeta {

LaurentPoly LaurentPoly::mul(const LaurentPoly& rhs, std::optional<int> q_max) const {
    const int cap = q_max.value_or(std::numeric_limits<int>::max());
    LaurentPoly r;
    for (const auto& [m1, c1] : terms_) {
        if (m1.q > cap) continue;
        for (const auto& [m2, c2] : rhs.terms_) {
            if (m2.q > cap - m1.q) continue;
            r.add_term(Monomial(m1.q + m2.q, m1.t + m2.t, m1.a + m2.a),
                       c1 * c2);
        }
    }
    return r;
}

int LaurentPoly::min_t() const {
    if (terms_.empty()) throw std::domain_error("min_t of zero polynomial");
    int t = terms_.begin()->first.t;
    for (const auto& [m, c] : terms_) t = std::min(t, m.t);
    return t;
}

int LaurentPoly::max_q() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.q;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> parts;
        if (m.q == 1) parts.push_back("Q");
        else if (m.q != 0) parts.push_back("Q^" + std::to_string(m.q));
        if (m.t == 1) parts.push_back("T");
        else if (m.t != 0) parts.push_back("T^" + std::to_string(m.t));
        if (m.a == 1) parts.push_back("a");
        else if (m.a != 0) parts.push_back("a^" + std::to_string(m.a));
        if (parts.empty()) {
            out << abs.str();
        } else {
            if (abs != 1) out << abs.str() << "*";
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) out << "*";
                out << parts[i];
            }
        }
    }
    return out.str();
}

std::string LaurentPoly::json() const {
    std::ostringstream out;
    out << "{\"terms\":[";
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << ",";
        first = false;
        out << "[" << m.q << "," << m.t << "," << m.a << ",\"" << c.str() << "\"]";
    }
    out << "]}";
    return out.str();
}

LaurentPoly specialize(const LaurentPoly& p, Variable var, int value) {
    if (value != 0 && value != 1)
        throw std::invalid_argument("specialize: value must be 0 or 1");
    LaurentPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (var == Variable::T) {
            if (value == 0) {
                if (m.t < 0)
                    throw std::domain_error(
                        "specialize: T=0 undefined on Laurent terms");
                if (m.t > 0) continue;
                r.add_term(m, c);
            } else {
                r.add_term(Monomial(m.q, 0, m.a), c);
            }
        } else {
            if (value == 0) {
                if (m.a > 0) continue;
                r.add_term(m, c);
            } else {
                r.add_term(Monomial(m.q, m.t, 0), c);
            }
        }
    }
    return r;
}

QSeries QSeries::from_poly(const LaurentPoly& p, int nmax) {
    QSeries s(nmax);
    for (const auto& [m, c] : p.terms())
        if (m.q <= nmax)
            s.coeffs_[m.q].add_term(Monomial(0, m.t, m.a), c);
    return s;
}

void QSeries::set_coeff(int n, LaurentPoly p) {
    for (const auto& [m, c] : p.terms())
        if (m.q != 0)
            throw std::domain_error("QSeries coefficient carries a Q exponent");
    coeffs_.at(n) = std::move(p);
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const LaurentPoly& p) { return p.is_zero(); });
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    int n = std::min(nmax(), rhs.nmax());
    coeffs_.resize(n + 1);
    for (int i = 0; i <= n; ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
    int n = std::min(nmax(), rhs.nmax());
    coeffs_.resize(n + 1);
    for (int i = 0; i <= n; ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
    QSeries r(std::min(lhs.nmax(), rhs.nmax()));
    for (int n = 0; n <= r.nmax(); ++n) {
        LaurentPoly c;
        for (int i = 0; i <= n; ++i) c += lhs.coeff(i) * rhs.coeff(n - i);
        r.coeffs_[n] = std::move(c);
    }
    return r;
}

QSeries QSeries::truncated(int n) const {
    QSeries r(std::min(n, nmax()));
    for (int i = 0; i <= r.nmax(); ++i) r.coeffs_[i] = coeffs_[i];
    return r;
}

LaurentPoly QSeries::to_poly() const {
    LaurentPoly p;
    for (int n = 0; n <= nmax(); ++n)
        for (const auto& [m, c] : coeffs_[n].terms())
            p.add_term(Monomial(n, m.t, m.a), c);
    return p;
}

std::optional<int> QSeries::first_divergence(const QSeries& other, int upto) const {
    int n = std::min({upto, nmax(), other.nmax()});
    for (int i = 0; i <= n; ++i)
        if (coeffs_[i] != other.coeff(i)) return i;
    return std::nullopt;
}

std::string QSeries::json() const {
    std::ostringstream out;
    out << "{\"nmax\":" << nmax() << ",\"coeffs\":[";
    for (int n = 0; n <= nmax(); ++n) {
        if (n) out << ",";
        out << "[" << n << ",[";
        bool first = true;
        for (const auto& [m, c] : coeffs_[n].terms()) {
            if (m.a != 0)
                throw std::domain_error("QSeries::json: a-graded series not serializable");
            if (!first) out << ",";
            first = false;
            out << "[" << m.t << ",\"" << c.str() << "\"]";
        }
        out << "]]";
    }
    out << "]}";
    return out.str();
}

QSeries specialize(const QSeries& s, Variable var, int value) {
    QSeries r(s.nmax());
    for (int n = 0; n <= s.nmax(); ++n)
        r.set_coeff(n, specialize(s.coeff(n), var, value));
    return r;
}

QSeries qseries_substitute_T(const QSeries& s, int out_nmax) {
    QSeries r(out_nmax);
    for (int n = 0; n <= s.nmax(); ++n) {
        for (const auto& [m, c] : s.coeff(n).terms()) {
            if (m.a != 0)
                throw std::domain_error("qseries_substitute_T: a-graded input");
            if (m.t > 0)
                throw std::domain_error(
                    "qseries_substitute_T: positive T exponent, truncation unsound");
            int q = n - m.t;
            if (q <= out_nmax) {
                LaurentPoly coef = r.coeff(q);
                coef.add_term(Monomial(0, -2 * m.t, 0), c);
                r.set_coeff(q, std::move(coef));
            }
        }
    }
    return r;
}

FactoredRational::FactoredRational(LaurentPoly num, std::vector<Factor> den)
    : num_(std::move(num)), den_(std::move(den)) {
    for (const Factor& f : den_)
        if (f.alpha < 1)
            throw std::domain_error(
                "FactoredRational: factor with alpha < 1 has no Q-adic expansion");
    std::sort(den_.begin(), den_.end());
}

FactoredRational operator*(const FactoredRational& lhs, const FactoredRational& rhs) {
    std::vector<Factor> den = lhs.den_;
    den.insert(den.end(), rhs.den_.begin(), rhs.den_.end());
    return FactoredRational(lhs.num_ * rhs.num_, std::move(den));
}

QSeries FactoredRational::to_series(int nmax) const {
    QSeries s = QSeries::from_poly(num_, nmax);
    for (const Factor& f : den_) {
        QSeries g(nmax);
        for (int j = 0; f.alpha * j <= nmax; ++j)
            g.set_coeff(f.alpha * j, LaurentPoly::term(1, 0, f.beta * j));
        s = s * g;
    }
    return s;
}

LaurentPoly FactoredRational::to_polynomial_total_degree(int m) const {
    for (const auto& [mm, c] : num_.terms())
        if (mm.t < 0)
            throw std::domain_error(
                "total-degree expansion needs a numerator polynomial in T");
    LaurentPoly r = num_.truncate_total(m);
    for (const Factor& f : den_) {
        if (f.beta < 0)
            throw std::domain_error(
                "total-degree expansion needs factors with beta >= 0");
        LaurentPoly g;
        for (int j = 0; j * (f.alpha + f.beta) <= m; ++j)
            g.add_term(Monomial(f.alpha * j, f.beta * j), 1);
        r = (r * g).truncate_total(m);
    }
    return r;
}

FactoredRational FactoredRational::substitute_T() const {
    LaurentPoly num;
    for (const auto& [m, c] : num_.terms()) {
        if (m.a != 0)
            throw std::domain_error("substitute_T: a-graded numerator");
        if (m.q - m.t < 0)
            throw std::domain_error(
                "substitute_T: image monomial has negative Q exponent");
        num.add_term(Monomial(m.q - m.t, -2 * m.t), c);
    }
    std::vector<Factor> den;
    den.reserve(den_.size());
    for (const Factor& f : den_) {
        if (f.alpha - f.beta < 1)
            throw std::domain_error(
                "substitute_T: image factor not Q-adically expandable");
        den.push_back(Factor{f.alpha - f.beta, -2 * f.beta});
    }
    return FactoredRational(std::move(num), std::move(den));
}

LaurentPoly FactoredRational::denominator_expanded() const {
    LaurentPoly r = LaurentPoly::one();
    for (const Factor& f : den_) r = r * LaurentPoly::one_minus(f.alpha, f.beta);
    return r;
}

}  // namespace hilbzeta
