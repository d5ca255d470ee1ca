#include "flatnorm/geometry.hpp"

#include "flatnorm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace flatnorm {

namespace {

double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double dist(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// det of a symmetric positive semidefinite matrix via Cholesky-free Gaussian
// elimination with partial pivoting; clamps tiny negatives from roundoff.
double gram_det(std::vector<std::vector<double>> g) {
    const std::size_t n = g.size();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(g[i][k]) > std::fabs(g[piv][k])) piv = i;
        if (piv != k) {
            std::swap(g[piv], g[k]);
            det = -det;
        }
        if (g[k][k] == 0.0) return 0.0;
        det *= g[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            double f = g[i][k] / g[k][k];
            for (std::size_t j = k; j < n; ++j) g[i][j] -= f * g[k][j];
        }
    }
    return det;
}

std::vector<Point> gather(const SimplicialComplex& K, const VertexTuple& t) {
    std::vector<Point> pts;
    pts.reserve(t.size());
    for (int v : t) pts.push_back(K.vertices[v]);
    return pts;
}

} // namespace

double simplex_volume(std::span<const Point> points) {
    const int ell = static_cast<int>(points.size()) - 1;
    if (ell < 0) return 0.0;
    if (ell == 0) return 1.0; // 0-volume of a point; makes P(edge) = 2
    const std::size_t q = points[0].size();
    if (static_cast<std::size_t>(ell) > q)
        throw DimensionMismatch("simplex dimension exceeds ambient dimension");

    std::vector<Point> edges(ell, Point(q));
    for (int i = 0; i < ell; ++i)
        for (std::size_t c = 0; c < q; ++c) edges[i][c] = points[i + 1][c] - points[0][c];

    std::vector<std::vector<double>> g(ell, std::vector<double>(ell));
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) g[i][j] = dot(edges[i], edges[j]);

    double det = gram_det(std::move(g));
    if (det <= 0.0) return 0.0;
    double fact = 1.0;
    for (int i = 2; i <= ell; ++i) fact *= i;
    return std::sqrt(det) / fact;
}

double ball_volume(int ell, double r) {
    return std::pow(M_PI, ell / 2.0) / std::tgamma(ell / 2.0 + 1.0) * std::pow(r, ell);
}

SimplexGeometry simplex_geometry(const SimplicialComplex& K, int ell, int index) {
    if (!K.has_coordinates()) throw MissingCoordinates("simplex_geometry needs vertex coordinates");
    const VertexTuple& t = K.simplex(ell, index);
    auto pts = gather(K, t);

    SimplexGeometry g;
    g.dim = ell;
    g.volume = simplex_volume(pts);
    if (g.volume <= 0.0)
        throw DegenerateSimplex("zero-volume simplex " + std::to_string(index) + " in dimension " + std::to_string(ell));

    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            g.diameter = std::max(g.diameter, dist(pts[i], pts[j]));

    std::vector<Point> face(pts.size() - 1);
    for (std::size_t skip = 0; skip < pts.size(); ++skip) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (i != skip) face[k++] = pts[i];
        g.perimeter += simplex_volume(face);
    }

    double inradius = ell * g.volume / g.perimeter;
    g.inradius_half = inradius / 2.0;
    g.ball_volume = ball_volume(ell, g.inradius_half);
    return g;
}

RegularityReport regularity_report(const SimplicialComplex& K) {
    if (!K.has_coordinates()) throw MissingCoordinates("regularity_report needs vertex coordinates");
    RegularityReport r;
    r.top_dim = K.top_dim();
    r.per_simplex.resize(r.top_dim + 1);
    for (int ell = 1; ell <= r.top_dim; ++ell) {
        r.per_simplex[ell].reserve(K.count(ell));
        for (int i = 0; i < K.count(ell); ++i) {
            SimplexGeometry g = simplex_geometry(K, ell, i);
            double k1 = g.diameter * g.perimeter / g.ball_volume;
            double k2 = g.diameter / g.inradius_half;
            if (k1 > r.kappa1) {
                r.kappa1 = k1;
                r.kappa1_argmax_dim = ell;
                r.kappa1_argmax_index = i;
            }
            if (k2 > r.kappa2) {
                r.kappa2 = k2;
                r.kappa2_argmax_dim = ell;
                r.kappa2_argmax_index = i;
            }
            r.delta = std::max(r.delta, g.diameter);
            r.per_simplex[ell].push_back(g);
        }
    }
    r.theta = r.kappa1 + r.kappa2;
    return r;
}

} // namespace flatnorm
