#pragma once

#include <optional>

#include "slagtoric/matrix.hpp"
#include "slagtoric/normal_form.hpp"

namespace slag {

// A full-rank lattice N in ambient Q^n, given by the matrix whose columns
// generate it. Points are always carried in ambient rational coordinates;
// N-coordinates exist only transiently through basis()⁻¹.
class LatticeSpec {
  public:
    LatticeSpec() = default;
    explicit LatticeSpec(RatMat basis);

    static LatticeSpec standard(size_t rank);

    size_t rank() const { return basis_.rows(); }
    const RatMat& basis() const { return basis_; }
    const RatMat& basis_inverse() const { return inv_; }

    bool is_standard() const;

    // Ambient point -> coordinates w.r.t. the lattice basis (rational).
    RatVec to_lattice_coords(const RatVec& ambient) const { return inv_ * ambient; }
    RatVec to_ambient(const RatVec& coords) const { return basis_ * coords; }

    bool contains(const RatVec& ambient) const;

    // Integer coordinates of a lattice point; throws if not in N.
    IntVec lattice_coords(const RatVec& ambient) const;

    // Divides by the gcd of N-coordinates. keep_direction=false also flips
    // sign so the first nonzero N-coordinate is positive.
    RatVec primitive(const RatVec& ambient, bool keep_direction = true) const;

    // The dual lattice M = {m : <m, N> ⊂ Z}; its basis is basis()^{-T}.
    LatticeSpec dual() const;

    bool operator==(const LatticeSpec&) const = default;

  private:
    RatMat basis_;
    RatMat inv_;
};

// Coordinates of v in the given spanning set, exact; nullopt when v is not
// in the span (NotInSpan). Throws if the basis is not linearly independent.
std::optional<RatVec> express_in_basis(const RatVec& v, const std::vector<RatVec>& basis);

enum class BasisCheck { Yes, No, DimensionMismatch };

// True iff the vectors (lattice points of N) generate N, i.e. their
// N-coordinate matrix has determinant ±1.
BasisCheck is_lattice_basis(const std::vector<RatVec>& vectors, const LatticeSpec& lattice);

}  // namespace slag
