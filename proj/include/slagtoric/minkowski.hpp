#pragma once

#include "slagtoric/cones.hpp"
#include "slagtoric/fibration.hpp"

namespace slag {

// Convex lattice polygon in L = Z^2 (degenerate case: a segment given by
// its two endpoints). Vertices are the extreme points in counterclockwise
// order, starting from the lexicographically smallest.
struct LatticePolygon {
    std::vector<std::array<Int, 2>> vertices;

    bool is_segment() const { return vertices.size() == 2; }
    bool operator==(const LatticePolygon&) const = default;
};

// Validates convexity (input points must all be extreme) and canonicalizes
// the cyclic order.
LatticePolygon make_polygon(std::vector<std::array<Int, 2>> points);

struct EdgeVector {
    std::array<Int, 2> dir;  // primitive, counterclockwise
    Int multiplicity;        // lattice length
};

// Counterclockwise primitive edge vectors with multiplicities; sums to zero.
std::vector<EdgeVector> edge_vector_multiset(const LatticePolygon& p);

struct MinkowskiDecomposition {
    std::vector<LatticePolygon> summands;  // each translated to lex-min vertex at origin
};

// All Minkowski decompositions into lattice summands, up to reordering and
// translation; maximal_only keeps the nontrivial ones whose summands are
// all indecomposable. Exhaustive over partitions of the primitive edge
// multiset; throws TooLarge past the search budget.
std::vector<MinkowskiDecomposition> minkowski_decompositions(const LatticePolygon& p,
                                                             bool maximal_only);

struct AltmannCone {
    LatticeSpec n_prime;      // L + Z^{p+1}, standard of rank 2 + p + 1
    Cone sigma_tilde;
    RatVec m0_prime;          // e_0* + ... + e_p*
    IntMat embedding;         // N = L + Z n0 -> N', (l, a) -> (l, a, ..., a)
    size_t num_summands = 0;  // p + 1
};

// Cone over the summands placed at heights e_0, ..., e_p.
AltmannCone altmann_cone(const LatticePolygon& p, const MinkowskiDecomposition& d);

// sigma = sigma_tilde ∩ N_R under the diagonal embedding, both inclusions
// checked exactly on extreme rays.
bool verify_embedding(const AltmannCone& a);

struct SmoothingComponent {
    size_t summand;                        // k
    Rat plane_value;                       // Im(i^{n+1}(x0 - xk))
    std::array<Int, 2> direction;          // primitive annihilator of n1 - n2 in L*
    std::array<std::array<Int, 2>, 2> edge;  // (n1, n2), an edge of R_k
};

struct SmoothingDiscriminant {
    std::vector<SmoothingComponent> components;
    std::vector<Rat> plane_values;  // one per summand
    bool generic = false;           // all plane values distinct
};

// One component per edge of each summand; the extent along the line is
// metric-dependent and deliberately not computed.
SmoothingDiscriminant smoothing_discriminant(const MinkowskiDecomposition& d,
                                             const std::vector<GaussRat>& x, int dim_n);

struct ExtremalTransitionReport {
    size_t num_summands = 0;
    SmoothingDiscriminant at_x;
    SmoothingDiscriminant at_zero;     // all plane values collapse to 0
    bool planes_collapse_at_zero = false;
    // resolution side (optional): graph shape summary
    bool has_resolution_graph = false;
    size_t resolution_vertices = 0;
    size_t resolution_bounded_edges = 0;
    size_t resolution_rays = 0;
};

ExtremalTransitionReport extremal_transition_report(const MinkowskiDecomposition& d,
                                                    const std::vector<GaussRat>& x, int dim_n,
                                                    const DiscriminantGraph* resolution_graph);

}  // namespace slag
