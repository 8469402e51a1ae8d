#pragma once

#include <array>

#include "slagtoric/cones.hpp"
#include "slagtoric/fibration.hpp"

namespace slag {

// Max-plus polynomial max(c_{a,b} + a x + b y) over a finite support.
struct TropicalPolynomial {
    std::vector<std::array<Int, 2>> support;
    RatVec heights;
};

struct TropicalCurve {
    std::vector<RatVec> vertices;  // rational points of the plane

    struct BoundedEdge {
        size_t a, b;    // vertex indices
        IntVec dir;     // primitive, from a to b
        Int mult;       // lattice length of the dual subdivision edge
        std::array<size_t, 2> dual_edge;  // support indices
    };
    std::vector<BoundedEdge> bounded;

    struct Ray {
        bool has_vertex;
        size_t vertex;  // when has_vertex
        RatVec base;    // anchor point (always set)
        IntVec dir;     // primitive
        Int mult;
        std::array<size_t, 2> dual_edge;
    };
    std::vector<Ray> rays;  // full lines appear as two opposite rays

    // Regular subdivision of the support polygon dual to the curve:
    // one cell (sorted support indices) per curve vertex, parallel order.
    std::vector<std::vector<size_t>> dual_cells;
};

// Exact corner locus of the tropical polynomial, with the dual regular
// subdivision and balancing verified. Throws DegenerateHeights on
// duplicate support points or fewer than two terms.
TropicalCurve tropical_curve(const TropicalPolynomial& tp);

// Integral-affine comparison map applied to the discriminant graph before
// matching it with the spine.
struct BasisChange {
    IntMat linear;   // 2x2, nonzero determinant
    RatVec offset;   // 2
};

struct SpineComparison {
    bool isomorphic = false;
    std::string detail;
    size_t vertices = 0, bounded_edges = 0, rays = 0;  // common counts when isomorphic
    double max_vertex_distance = 0.0;   // after the map, before scale fitting
    double fitted_scale = 1.0;          // least-squares scale spine ~ s * mapped graph
    double fitted_max_distance = 0.0;   // after applying the fitted scale
};

// Combinatorial isomorphism (counts, incidences, ray directions through the
// basis change) plus position discrepancy reporting.
SpineComparison compare_spine_to_discriminant(const TropicalCurve& tc,
                                              const DiscriminantGraph& g,
                                              const BasisChange& map);

struct FatteningResult {
    double contained = 0.0;  // fraction of cloud points within eps of the spine
    double covers = 0.0;     // fraction of spine samples within eps of the cloud
    size_t cloud_points_in_window = 0;
    size_t spine_samples = 0;
};

struct Window {
    double xmin, xmax, ymin, ymax;
    bool inside(double x, double y) const {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
};

FatteningResult fattening_check(const std::vector<std::array<double, 2>>& cloud,
                                const TropicalCurve& tc, double eps, const Window& w);

// Smallest eps for which both fattening fractions reach the target
// (bisection on the two one-sided distances).
double required_fattening_eps(const std::vector<std::array<double, 2>>& cloud,
                              const TropicalCurve& tc, const Window& w, double fraction = 0.99);

}  // namespace slag
