#pragma once

#include "flatnorm/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace flatnorm::detail {

using SparseCol = std::vector<std::pair<int, Rational>>;

/// Dense rational workspace with a touched-index list so that solves pay only
/// for the entries they actually reach.
struct Workspace {
    std::vector<Rational> value;
    std::vector<int> touched;
    std::vector<unsigned char> mark;

    void resize(int n) {
        value.resize(n);
        mark.assign(n, 0);
        touched.clear();
    }
    void set(int i, const Rational& v) {
        value[i] = v;
        if (!mark[i]) {
            mark[i] = 1;
            touched.push_back(i);
        }
    }
    Rational& at(int i) {
        if (!mark[i]) {
            mark[i] = 1;
            touched.push_back(i);
            value[i] = 0;
        }
        return value[i];
    }
    void clear() {
        for (int i : touched) {
            value[i] = 0;
            mark[i] = 0;
        }
        touched.clear();
    }
};

/**
 * Exact LU factorization of a basis matrix with product-form eta updates.
 * Elimination is column-oriented with a Markowitz-flavoured pivot choice
 * (shortest active column, then least filled row, then unit pivot values).
 * Solves replay the elimination on the right-hand side and skip zero work,
 * so sparse right-hand sides cost roughly their fill.
 */
class BasisFactor {
public:
    // columns[j] = basis column at position j, entries sorted by row.
    // Returns false when the matrix is singular.
    bool factor(int m, const std::vector<const SparseCol*>& columns);

    // Solve B x = rhs. rhs enters indexed by row, the solution leaves indexed
    // by basis position. `rhs` is consumed (cleared).
    void ftran(Workspace& rhs, Workspace& out) const;

    // Solve B^T y = rhs. rhs enters indexed by basis position, the solution
    // leaves indexed by row. `rhs` is consumed (cleared).
    void btran(Workspace& rhs, Workspace& out) const;

    // Basis position `pos` is replaced by a column whose ftran image is
    // `spike` (position-indexed). `spike` is consumed.
    void append_update(int pos, Workspace& spike);

    int size() const { return m_; }
    std::size_t update_count() const { return etas_.size(); }
    std::size_t update_nnz() const { return eta_nnz_; }

private:
    struct Step {
        int prow = 0;
        int pcol = 0;
        Rational pivot;
        SparseCol col; // entries of the reduced column in rows pivoted later
    };
    struct Op { // column op: col[target] -= f * col[source]
        int target = 0;
        int source = 0;
        Rational f;
    };
    struct Eta {
        int pos = 0;
        Rational diag;
        SparseCol entries; // position-indexed, excluding `pos`
    };

    int m_ = 0;
    std::vector<Step> steps_;
    std::vector<Op> ops_;
    std::vector<Eta> etas_;
    std::size_t eta_nnz_ = 0;
};

} // namespace flatnorm::detail
