#include "flatnorm/complex.hpp"

#include "flatnorm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace flatnorm {

namespace {

std::string tuple_str(const VertexTuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

} // namespace

int SimplicialComplex::count(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(simplices.size())) return 0;
    return static_cast<int>(simplices[dim].size());
}

const VertexTuple& SimplicialComplex::simplex(int dim, int index) const {
    if (dim < 0 || dim > top_dim()) throw DimensionOutOfRange("no simplices of dimension " + std::to_string(dim));
    const auto& list = simplices[dim];
    if (index < 0 || index >= static_cast<int>(list.size()))
        throw IndexOutOfRange("simplex index " + std::to_string(index) + " out of range in dimension " + std::to_string(dim));
    return list[index];
}

int SimplicialComplex::index_of(int dim, const VertexTuple& canonical) const {
    if (dim < 0 || dim > top_dim()) return -1;
    const auto& list = simplices[dim];
    auto it = std::lower_bound(list.begin(), list.end(), canonical);
    if (it == list.end() || *it != canonical) return -1;
    return static_cast<int>(it - list.begin());
}

std::int64_t Chain::coefficient(int index) const {
    auto it = coefficients.find(index);
    return it == coefficients.end() ? 0 : it->second;
}

void Chain::add(int index, std::int64_t value) {
    if (value == 0) return;
    auto [it, inserted] = coefficients.emplace(index, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) coefficients.erase(it);
    }
}

Chain Chain::operator-() const {
    Chain r;
    r.dim = dim;
    for (const auto& [i, c] : coefficients) r.coefficients.emplace(i, -c);
    return r;
}

Chain operator+(const Chain& a, const Chain& b) {
    if (a.dim != b.dim) throw DimensionMismatch("chain dimensions differ");
    Chain r = a;
    for (const auto& [i, c] : b.coefficients) r.add(i, c);
    return r;
}

Chain operator-(const Chain& a, const Chain& b) {
    return a + (-b);
}

SimplicialComplex build_complex(const std::vector<VertexTuple>& top_simplices,
                                const std::vector<Point>& coords,
                                int num_vertices) {
    int nv = num_vertices;
    if (!coords.empty()) nv = static_cast<int>(coords.size());
    if (nv < 0) {
        nv = 0;
        for (const auto& t : top_simplices)
            for (int v : t) nv = std::max(nv, v + 1);
    }

    int top = 0;
    std::vector<std::set<VertexTuple>> seen(1);
    for (const auto& raw : top_simplices) {
        if (raw.empty()) throw DegenerateSimplex("empty simplex tuple");
        VertexTuple t = raw;
        std::sort(t.begin(), t.end());
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            if (t[i] == t[i + 1]) throw DegenerateSimplex("repeated vertex in simplex " + tuple_str(raw));
        for (int v : t)
            if (v < 0 || v >= nv) throw IndexOutOfRange("vertex id " + std::to_string(v) + " in simplex " + tuple_str(raw));
        int dim = static_cast<int>(t.size()) - 1;
        if (dim > top) {
            top = dim;
            seen.resize(top + 1);
        }
        seen[dim].insert(std::move(t));
    }

    // Close under faces, top-down.
    for (int dim = top; dim >= 1; --dim) {
        for (const auto& t : seen[dim]) {
            VertexTuple face(t.size() - 1);
            for (std::size_t skip = 0; skip < t.size(); ++skip) {
                std::size_t k = 0;
                for (std::size_t i = 0; i < t.size(); ++i)
                    if (i != skip) face[k++] = t[i];
                seen[dim - 1].insert(face);
            }
        }
    }
    // Every vertex of the coordinate list is part of the complex.
    for (int v = 0; v < nv; ++v) seen[0].insert(VertexTuple{v});

    SimplicialComplex K;
    K.vertices = coords;
    K.ambient_dim = coords.empty() ? 0 : static_cast<int>(coords[0].size());
    for (const auto& p : coords)
        if (static_cast<int>(p.size()) != K.ambient_dim)
            throw DimensionMismatch("inconsistent coordinate dimensions");
    K.simplices.resize(top + 1);
    for (int dim = 0; dim <= top; ++dim)
        K.simplices[dim].assign(seen[dim].begin(), seen[dim].end()); // std::set iterates sorted
    return K;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& K, int d) {
    if (d < 0 || d >= K.top_dim())
        throw DimensionOutOfRange("boundary_matrix needs 0 <= d < top dimension");
    BoundaryMatrix B;
    B.dim = d;
    B.rows = K.count(d);
    B.cols = K.count(d + 1);
    B.columns.resize(B.cols);
    VertexTuple face;
    for (int j = 0; j < B.cols; ++j) {
        const VertexTuple& t = K.simplices[d + 1][j];
        face.resize(t.size() - 1);
        for (std::size_t skip = 0; skip < t.size(); ++skip) {
            std::size_t k = 0;
            for (std::size_t i = 0; i < t.size(); ++i)
                if (i != skip) face[k++] = t[i];
            int row = K.index_of(d, face);
            if (row < 0) throw Error("complex not closed under faces"); // cannot happen for build_complex output
            int sign = (skip % 2 == 0) ? +1 : -1;
            B.columns[j].emplace_back(row, sign);
        }
    }
    return B;
}

Chain apply_boundary(const BoundaryMatrix& B, const Chain& s) {
    if (s.dim != B.dim + 1) throw DimensionMismatch("apply_boundary expects a (d+1)-chain");
    Chain r;
    r.dim = B.dim;
    for (const auto& [j, sj] : s.coefficients) {
        if (j < 0 || j >= B.cols) throw IndexOutOfRange("chain index outside boundary matrix");
        for (const auto& [i, sign] : B.columns[j]) r.add(i, sign * sj);
    }
    return r;
}

double chain_mass(const Chain& c, std::span<const double> weights) {
    double mass = 0.0;
    for (const auto& [i, ci] : c.coefficients) {
        if (i < 0 || i >= static_cast<int>(weights.size()))
            throw IndexOutOfRange("chain index outside weight vector");
        if (weights[i] < 0) throw NegativeWeight("negative weight at index " + std::to_string(i));
        mass += weights[i] * static_cast<double>(std::llabs(ci));
    }
    return mass;
}

} // namespace flatnorm
