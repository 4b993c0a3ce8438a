#include "hilbzeta/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hilbzeta {

namespace {

int layer_boxes(const Layer& l) {
    return l.i + l.j - (l.kind == LayerKind::Two ? 1 : 0);
}

// outer directly below inner; the Proposition 7.2/7.3 table
bool adjacent_ok(const Layer& outer, const Layer& inner) {
    bool grown = outer.i >= inner.i + 1 && outer.j >= inner.j + 1;
    if (outer.kind == LayerKind::One && inner.kind == LayerKind::One)
        return (outer.i == inner.i && outer.j == inner.j) || grown;
    if (outer.kind == LayerKind::One && inner.kind == LayerKind::Two)
        return outer.i >= inner.i && outer.j >= inner.j;
    return grown;  // (2)(2) and (2)(1)
}

}  // namespace

LaurentPoly StratumStats::contribution() const {
    LaurentPoly t2_minus_1 = LaurentPoly::term(1, 0, 2) - LaurentPoly::one();
    return t2_minus_1.pow(m1).shifted(n, 2 * m2);
}

bool WeakDiagonalPartition::valid() const {
    for (const Layer& l : layers_)
        if (l.i < 1 || l.j < 1) return false;
    for (size_t k = 0; k + 1 < layers_.size(); ++k)
        if (!adjacent_ok(layers_[k], layers_[k + 1])) return false;
    return true;
}

int WeakDiagonalPartition::box_count() const {
    if (!valid()) throw std::domain_error("box_count of invalid partition");
    int n = 0;
    for (const Layer& l : layers_) n += layer_boxes(l);
    return n;
}

StratumStats WeakDiagonalPartition::stats() const {
    int n = box_count();  // validates
    int m1 = 0;
    int twos = 0;
    for (const Layer& l : layers_)
        if (l.kind == LayerKind::One) ++m1;
    for (size_t k = 0; k + 1 < layers_.size(); ++k) {
        const Layer& o = layers_[k];
        const Layer& i = layers_[k + 1];
        if (o.kind == LayerKind::One && i.kind == LayerKind::One &&
            o.i == i.i && o.j == i.j)
            --m1;  // head of the outer row is pinned
        if (o.kind == LayerKind::Two && i.kind == LayerKind::Two) ++twos;
    }
    int delta0 = layers_.empty() ? 0 : layer_boxes(layers_.front());
    return StratumStats{n, m1, (n - delta0) + twos};
}

WeakDiagonalPartition WeakDiagonalPartition::minimal_core() const {
    if (!valid()) throw std::domain_error("minimal_core of invalid partition");
    std::vector<Layer> out(layers_);
    for (size_t r = layers_.size(); r-- > 0;) {
        if (r + 1 == layers_.size()) {
            out[r].i = out[r].j = 1;
            continue;
        }
        const Layer& inner = out[r + 1];
        bool equal_ones = layers_[r].kind == LayerKind::One &&
                          layers_[r + 1].kind == LayerKind::One &&
                          layers_[r].i == layers_[r + 1].i &&
                          layers_[r].j == layers_[r + 1].j;
        bool tight = layers_[r].kind == LayerKind::One &&
                     layers_[r + 1].kind == LayerKind::Two;
        if (equal_ones || tight) {
            out[r].i = inner.i;
            out[r].j = inner.j;
        } else {
            out[r].i = inner.i + 1;
            out[r].j = inner.j + 1;
        }
    }
    return WeakDiagonalPartition(std::move(out));
}

std::string WeakDiagonalPartition::str() const {
    if (layers_.empty()) return "[]";
    std::ostringstream out;
    for (size_t k = 0; k < layers_.size(); ++k) {
        if (k) out << " ";
        out << "[" << (layers_[k].kind == LayerKind::One ? 1 : 2) << ",("
            << layers_[k].i << "," << layers_[k].j << ")]";
    }
    return out.str();
}

std::vector<WeakDiagonalPartition> wdp_enumerate(int n, int max_rows) {
    if (n < 0) throw std::domain_error("wdp_enumerate: negative box count");
    std::vector<WeakDiagonalPartition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // grow outward from the innermost row; a layer of d boxes fits only if
    // d <= boxes still unassigned, bounding the arm search
    std::vector<Layer> stack;  // innermost first
    std::function<void(int)> extend = [&](int used) {
        if (used == n && !stack.empty()) {
            std::vector<Layer> layers(stack.rbegin(), stack.rend());
            out.emplace_back(std::move(layers));
        }
        if (static_cast<int>(stack.size()) >= max_rows) return;
        int rem = n - used;
        for (LayerKind kind : {LayerKind::One, LayerKind::Two}) {
            for (int i = 1; i <= rem + 1; ++i) {
                for (int j = 1; j <= rem + 1; ++j) {
                    Layer cand{kind, i, j};
                    int d = layer_boxes(cand);
                    if (d > rem) continue;
                    if (!stack.empty() && !adjacent_ok(cand, stack.back()))
                        continue;
                    stack.push_back(cand);
                    extend(used + d);
                    stack.pop_back();
                }
            }
        }
    };
    extend(0);
    std::sort(out.begin(), out.end());
    return out;
}

LaurentPoly wdp_aggregate(int n, int max_rows) {
    LaurentPoly total;
    for (const WeakDiagonalPartition& p : wdp_enumerate(n, max_rows))
        total += p.stats().contribution();
    return total;
}

int VerticalStratum::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int VerticalStratum::dimension() const {
    int N = static_cast<int>(parts.size()) - 1;
    int dim = 0;
    for (int k = 1; k <= std::min(v, N); ++k) dim += parts[k];
    if (u == 2) {
        int M = -1;
        for (int m = v; m <= N; ++m) {
            bool all_ones = true;
            for (int k = m; k <= N; ++k)
                if (parts[k] != 1) { all_ones = false; break; }
            if (all_ones) { M = m; break; }
        }
        if (M >= 0)
            for (int k = (M + N) / 2 + 1; k <= N; ++k) dim += parts[k];
    }
    return dim;
}

LaurentPoly VerticalStratum::contribution() const {
    return LaurentPoly::term(1, n(), 2 * dimension());
}

std::vector<VerticalStratum> vertical_enumerate(int n, int u, int v) {
    if (u != 1 && u != 2)
        throw std::domain_error("vertical_enumerate: only u = 1 or 2 is supported");
    if (v < 1) throw std::domain_error("vertical_enumerate: v >= 1 required");
    if (n < 0) throw std::domain_error("vertical_enumerate: negative n");
    std::vector<VerticalStratum> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int prev) {
        if (remaining == 0) {
            out.push_back(VerticalStratum{parts, u, v});
            return;
        }
        int hi = std::min(prev, remaining);
        for (int val = hi; val >= 1; --val) {
            if (static_cast<int>(parts.size()) >= v && val > u) continue;
            parts.push_back(val);
            rec(remaining - val, val);
            parts.pop_back();
        }
    };
    if (n == 0) {
        out.push_back(VerticalStratum{{}, u, v});
        return out;
    }
    rec(n, n);
    return out;
}

LaurentPoly vertical_aggregate(int n, int u, int v) {
    LaurentPoly total;
    for (const VerticalStratum& s : vertical_enumerate(n, u, v))
        total += s.contribution();
    return total;
}

QSeries bounded_partitions_series(int k, int nmax) {
    if (k < 1) throw std::domain_error("bounded_partitions_series: k >= 1 required");
    QSeries s(nmax);
    LaurentPoly c0 = s.coeff(0);
    c0.add_term(Monomial(0, 0), 1);  // the empty partition
    s.set_coeff(0, std::move(c0));
    std::vector<LaurentPoly> acc(nmax + 1);
    std::function<void(int, int, int, int, int)> rec =
        [&](int first, int remaining, int count, int largest, int n) {
            if (remaining == 0) {
                acc[n].add_term(Monomial(0, n - largest), 1);
                return;
            }
            if (count == k) return;
            for (int val = std::min(first, remaining); val >= 1; --val)
                rec(val, remaining - val, count + 1, std::max(largest, val), n);
        };
    for (int n = 1; n <= nmax; ++n) rec(n, n, 0, 0, n);
    for (int n = 1; n <= nmax; ++n) s.set_coeff(n, std::move(acc[n]));
    return s;
}

}  // namespace hilbzeta
