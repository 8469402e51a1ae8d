#pragma once

#include "slagtoric/moment.hpp"

namespace slag {

// Basis e_1..e_n of N with m0 = e_1* + ... + e_n*, plus the induced basis
// f_i = e_1 - e_{i+1} of the sublattice N_{m0} = {n : <m0, n> = 0}.
struct AdaptedBasis {
    LatticeSpec lattice;
    RatVec m0;
    std::vector<RatVec> e;
    std::vector<RatVec> f;
};

// Deterministic HNF-based construction; nullopt when m0 is not primitive
// in the dual lattice (NoBasis).
std::optional<AdaptedBasis> adapted_basis(const LatticeSpec& lattice, const RatVec& m0);

// (x_1,...,x_n) -> (x_1-x_2,...,x_1-x_n) on coordinate tuples written in
// the basis dual to e_1..e_n; kills the m0 direction.
RatVec projection_r(const RatVec& x);

enum class FiberType { Generic22, Positive12, Negative21, SmoothTorus, NoncompactTR, Unclassified };

const char* fiber_type_name(FiberType t);

struct GraphEdge {
    bool bounded = true;
    size_t a = 0;       // vertex index
    size_t b = 0;       // vertex index (bounded) or ignored for rays
    IntVec ray_dir;     // primitive direction (rays only)
    // Labels (n = 3 only; empty otherwise):
    RatVec n1, n2;      // facet ray generators, lex-sorted
    RatVec delta;       // n1 - n2 in N_{m0}
    IntVec f_coords;    // delta in the f-basis
    IntMat monodromy;   // unipotent, (T - I)^2 = 0
    FiberType fiber = FiberType::Unclassified;
    bool labeled = false;
};

struct DiscriminantGraph {
    size_t ambient_dim = 2;  // n - 1
    bool proper = false;     // Theorem 2.4 semantics: generic fiber is an n-torus
    AdaptedBasis basis;
    std::vector<RatVec> vertices;
    std::vector<GraphEdge> bounded_edges;
    std::vector<GraphEdge> rays;
    std::vector<FiberType> vertex_types;
    std::vector<std::string> warnings;  // e.g. NonInjectiveProjection
    bool degenerate_no_bounded_edges = false;

    FiberType generic_fiber() const {
        return proper ? FiberType::SmoothTorus : FiberType::NoncompactTR;
    }
};

// Projects the polytope 1-skeleton along m0 and attaches per-edge lattice
// classes, monodromy and fiber types (n = 3). The planar embedding uses the
// ambient difference formula when m0 has all-ones ambient coordinates (the
// paper's convention), and the e-dual coordinates otherwise.
DiscriminantGraph discriminant_graph(const MomentPolytope& p, const Fan& f,
                                     const AdaptedBasis& b, bool proper = false);

// T = I + (a_1,...,a_{n-1},0)^T in the last column, delta = sum a_i f_i.
// nullopt when delta is not in N_{m0} (NotInSublattice).
std::optional<IntMat> edge_monodromy(const RatVec& delta, const AdaptedBasis& b);

struct ConsistencyReport {
    bool consistent = true;
    std::vector<size_t> offending_vertices;
};

// At every trivalent vertex the three incident classes, cyclically
// oriented, sum to zero; equivalently the monodromy product is the
// identity. Checked against the stored facet pairs.
ConsistencyReport vertex_consistency(const DiscriminantGraph& g);

struct DualEdgeData {
    IntVec circle_class;  // primitive annihilator of delta in N_{m0}*, f*-coordinates
    IntMat monodromy;     // inverse transpose
    FiberType fiber;
};

struct DualFibrationData {
    DiscriminantGraph graph;  // same underlying graph, types swapped
    std::vector<DualEdgeData> bounded_edges;
    std::vector<DualEdgeData> rays;
};

// Topological dual along Section 4: circle classes, inverse-transpose
// monodromy, (1,2) <-> (2,1). Throws InconsistentGraph when
// vertex_consistency fails.
DualFibrationData dualize(const DiscriminantGraph& g);

IntMat inverse_transpose(const IntMat& t);

}  // namespace slag
