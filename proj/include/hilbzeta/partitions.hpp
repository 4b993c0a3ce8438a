#pragma once

#include "hilbzeta/series.hpp"

#include <string>
#include <vector>

namespace hilbzeta {

/* The combinatorics indexing the strata of Hilb^n(x^u y^v, 0).
 *
 * Diagonal side: weak diagonal partitions, stacks of diagonal rows of two
 * kinds with arm lengths (i,j) per row, obeying outer-vs-inner growth
 * rules. Vertical side, for u in {1,2}: weakly decreasing integer
 * sequences with the tail bounded by u. */

enum class LayerKind { One, Two };

struct Layer {
    LayerKind kind = LayerKind::Two;
    int i = 1;  // horizontal arm, >= 1
    int j = 1;  // vertical arm, >= 1
    auto operator<=>(const Layer&) const = default;
};

struct StratumStats {
    int n = 0;   // total boxes
    int m1 = 0;  // torus factors (A - pt)^m1
    int m2 = 0;  // affine factors A^m2

    // Q^n (T^2-1)^m1 T^{2 m2}
    LaurentPoly contribution() const;
    auto operator<=>(const StratumStats&) const = default;
};

class WeakDiagonalPartition {
public:
    WeakDiagonalPartition() = default;  // zero boxes
    explicit WeakDiagonalPartition(std::vector<Layer> layers)
        : layers_(std::move(layers)) {}

    const std::vector<Layer>& layers() const { return layers_; }
    bool empty() const { return layers_.empty(); }

    /* Adjacency rules, outer layer k against inner layer k+1:
     *   (1)(1): equal pair, or both arms at least one larger;
     *   (2)(2) and (2)(1): both arms at least one larger;
     *   (1)(2): componentwise at least as large.
     * All arms >= 1. */
    bool valid() const;

    // row of kind One holds i+j boxes, kind Two holds i+j-1
    int box_count() const;

    // m1 = #One layers minus #equal (1)(1) adjacencies (each such head is
    // pinned to its inner neighbour); m2 = boxes outside the outermost row
    // plus #(2)(2) adjacencies
    StratumStats stats() const;

    // the unique arm-minimal partition with the same row-kind word and the
    // same equal/strict labels on (1)(1) adjacencies; idempotent
    WeakDiagonalPartition minimal_core() const;

    std::string str() const;  // "[1,(2,2)] [2,(1,1)]"

    auto operator<=>(const WeakDiagonalPartition&) const = default;

private:
    std::vector<Layer> layers_;  // index 0 is the outermost row
};

// every valid partition of exactly n boxes with at most max_rows layers,
// canonically sorted, duplicate free; n = 0 gives the empty partition
std::vector<WeakDiagonalPartition> wdp_enumerate(int n, int max_rows);

// sum of stratum contributions over wdp_enumerate(n, max_rows)
LaurentPoly wdp_aggregate(int n, int max_rows);

struct VerticalStratum {
    std::vector<int> parts;  // weakly decreasing, entries >= 1
    int u = 1;               // 1 or 2
    int v = 1;

    int n() const;
    /* Boxes in rows 1..v, plus for u=2 the boxes from row
     * floor((M+N)/2)+1 to row N where M is the least index >= v from
     * which the parts are all 1 (no such M, or no rows past v: the
     * second summand is zero). */
    int dimension() const;
    LaurentPoly contribution() const;  // Q^n T^{2 dim}

    auto operator<=>(const VerticalStratum&) const = default;
};

// all strata of n boxes on x^u y^v for u in {1,2}; other u are rejected
std::vector<VerticalStratum> vertical_enumerate(int n, int u, int v);

LaurentPoly vertical_aggregate(int n, int u, int v);

// Hilb series of the fat line y^k by cell enumeration: partitions with at
// most k parts, a partition of n with largest part l paving a cell of
// dimension n - l
QSeries bounded_partitions_series(int k, int nmax);

}  // namespace hilbzeta
