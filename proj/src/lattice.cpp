#include "slagtoric/lattice.hpp"

namespace slag {

LatticeSpec::LatticeSpec(RatMat basis) : basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols() || basis_.empty())
        throw std::invalid_argument("LatticeSpec: basis must be square and nonempty");
    auto inv = inverse(basis_);
    if (!inv) throw std::invalid_argument("LatticeSpec: basis is singular");
    inv_ = *inv;
}

LatticeSpec LatticeSpec::standard(size_t rank) {
    RatMat id(rank, rank);
    for (size_t i = 0; i < rank; ++i) id(i, i) = 1;
    return LatticeSpec(id);
}

bool LatticeSpec::is_standard() const {
    for (size_t i = 0; i < basis_.rows(); ++i)
        for (size_t j = 0; j < basis_.cols(); ++j)
            if (basis_(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
}

bool LatticeSpec::contains(const RatVec& ambient) const {
    RatVec c = to_lattice_coords(ambient);
    for (const auto& q : c)
        if (!is_integer(q)) return false;
    return true;
}

IntVec LatticeSpec::lattice_coords(const RatVec& ambient) const {
    RatVec c = to_lattice_coords(ambient);
    IntVec out(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (!is_integer(c[i])) throw std::invalid_argument("lattice_coords: point not in lattice");
        out[i] = c[i].get_num();
    }
    return out;
}

RatVec LatticeSpec::primitive(const RatVec& ambient, bool keep_direction) const {
    IntVec c = primitive_vector(to_lattice_coords(ambient), keep_direction);
    RatVec cr(c.size());
    for (size_t i = 0; i < c.size(); ++i) cr[i] = Rat(c[i]);
    return to_ambient(cr);
}

LatticeSpec LatticeSpec::dual() const {
    auto inv_t = inverse(basis_.transpose());
    return LatticeSpec(*inv_t);  // basis is invertible, so is its transpose
}

std::optional<RatVec> express_in_basis(const RatVec& v, const std::vector<RatVec>& basis) {
    if (basis.empty()) throw std::invalid_argument("express_in_basis: empty basis");
    RatMat b = RatMat::from_columns(basis);
    if (rank(b) != basis.size())
        throw std::invalid_argument("express_in_basis: basis not linearly independent");
    return solve(b, v);
}

BasisCheck is_lattice_basis(const std::vector<RatVec>& vectors, const LatticeSpec& lattice) {
    if (vectors.size() != lattice.rank()) return BasisCheck::DimensionMismatch;
    RatMat coords(lattice.rank(), vectors.size());
    for (size_t j = 0; j < vectors.size(); ++j)
        coords.set_col(j, lattice.to_lattice_coords(vectors[j]));
    Rat d = det(coords);
    return (d == 1 || d == -1) ? BasisCheck::Yes : BasisCheck::No;
}

}  // namespace slag
