#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace flatnorm {

using VertexTuple = std::vector<int>; // strictly increasing vertex ids
using Point = std::vector<double>;

/**
 * Finite oriented simplicial complex, closed under faces and immutable after
 * construction. Within each dimension simplices are sorted lexicographically
 * by vertex tuple, so indices are deterministic across runs and platforms.
 * The canonical orientation of a simplex is its increasing vertex order;
 * chains with opposite orientation carry negative coefficients.
 */
struct SimplicialComplex {
    int ambient_dim = 0;             // q; 0 when no coordinates were supplied
    std::vector<Point> vertices;     // empty for purely combinatorial complexes
    std::vector<std::vector<VertexTuple>> simplices; // simplices[dim][index]

    int top_dim() const { return static_cast<int>(simplices.size()) - 1; }
    bool has_coordinates() const { return !vertices.empty(); }
    int count(int dim) const;
    const VertexTuple& simplex(int dim, int index) const;
    /// Index of a canonical (sorted) tuple within its dimension, or -1.
    int index_of(int dim, const VertexTuple& canonical) const;
};

/// Sparse integer chain over the elementary basis of one dimension.
/// Canonical form: only nonzero coefficients are stored.
struct Chain {
    int dim = 0;
    std::map<int, std::int64_t> coefficients;

    bool is_zero() const { return coefficients.empty(); }
    std::int64_t coefficient(int index) const;
    void add(int index, std::int64_t value); // drops the entry when it cancels

    Chain operator-() const;
    friend Chain operator+(const Chain& a, const Chain& b);
    friend Chain operator-(const Chain& a, const Chain& b);
    friend bool operator==(const Chain& a, const Chain& b) = default;
};

/// Sparse m x n matrix over {-1,0,+1} mapping (d+1)-chains to d-chains.
/// Column j lists (row, sign) pairs: exactly d+2 of them, one per face.
struct BoundaryMatrix {
    int dim = 0; // d: rows index d-simplices, columns (d+1)-simplices
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> columns;
};

/**
 * Build a complex from maximal simplices (arbitrary dimensions, arbitrary
 * vertex order within each tuple) and optional coordinates. Faces are closed
 * over and deduplicated; vertices referenced only through `coords` size.
 *
 * Throws DegenerateSimplex for repeated vertices and IndexOutOfRange for
 * references past `num_vertices` (or coords.size() when coords are given).
 */
SimplicialComplex build_complex(const std::vector<VertexTuple>& top_simplices,
                                const std::vector<Point>& coords = {},
                                int num_vertices = -1);

/// Boundary operator [d+1 -> d] with the sign convention: deleting position i
/// of an increasing tuple contributes (-1)^i on that face.
BoundaryMatrix boundary_matrix(const SimplicialComplex& K, int d);

/// Exact sparse product: the d-chain of [boundary] * s for a (d+1)-chain s.
Chain apply_boundary(const BoundaryMatrix& B, const Chain& s);

/// Weighted 1-norm sum_i w_i |c_i|; weights must be nonnegative and cover
/// every simplex of c's dimension.
double chain_mass(const Chain& c, std::span<const double> weights);

} // namespace flatnorm
