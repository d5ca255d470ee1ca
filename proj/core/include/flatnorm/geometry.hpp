#pragma once

#include "flatnorm/complex.hpp"

#include <span>
#include <vector>

namespace flatnorm {

/**
 * Euclidean measurements of one nondegenerate simplex. `inradius_half` is
 * half the inradius: the retraction bounds integrate over the ball with half
 * the radius and the same center as the largest inscribed ball.
 */
struct SimplexGeometry {
    int dim = 0;             // ell
    double volume = 0.0;     // V_ell
    double diameter = 0.0;   // D: longest edge
    double perimeter = 0.0;  // P: total (ell-1)-volume of the facets
    double inradius_half = 0.0; // r_sigma = (ell * V / P) / 2
    double ball_volume = 0.0;   // V_ell of the radius-r_sigma ball
};

/// Complex-wide regularity constants of the deformation bounds. The maxima
/// run over simplices of dimension 1..p; vertices are excluded (D = 0).
struct RegularityReport {
    int top_dim = 0;      // p
    double kappa1 = 0.0;  // max D*P / V_ell(B_sigma)
    double kappa2 = 0.0;  // max D / r_sigma
    double delta = 0.0;   // max D
    double theta = 0.0;   // kappa1 + kappa2
    int kappa1_argmax_dim = 0, kappa1_argmax_index = 0;
    int kappa2_argmax_dim = 0, kappa2_argmax_index = 0;
    std::vector<std::vector<SimplexGeometry>> per_simplex; // [dim][index], dims 1..p populated
};

/// ell-volume of the simplex spanned by `points` (ell = points.size()-1):
/// sqrt(det(G^T G)) / ell! over edge vectors. Degenerate simplices yield 0.
double simplex_volume(std::span<const Point> points);

/// Volume of the ell-dimensional ball of radius r.
double ball_volume(int ell, double r);

/// Measurements for one simplex of K; throws DegenerateSimplex when the
/// volume vanishes (the inradius is undefined) and MissingCoordinates when K
/// carries none.
SimplexGeometry simplex_geometry(const SimplicialComplex& K, int ell, int index);

/// Regularity constants over every simplex of dimension 1..p.
RegularityReport regularity_report(const SimplicialComplex& K);

} // namespace flatnorm
