#pragma once

#include "slagtoric/matrix.hpp"

namespace slag {

struct HnfResult {
    IntMat h;  // row-style Hermite normal form
    IntMat u;  // unimodular, u * m = h
};

// Row-style Hermite normal form: U*m = H with |det U| = 1, pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows at the bottom.
HnfResult hermite_normal_form(const IntMat& m);

struct SnfResult {
    IntMat s;  // diagonal, d_i | d_{i+1}
    IntMat u;  // unimodular, rows
    IntMat v;  // unimodular, columns; u * m * v = s
};

SnfResult smith_normal_form(const IntMat& m);

// Basis of the integer kernel ker(m) ∩ Z^cols of a rational matrix.
// Vectors are primitive and sign-normalized (first nonzero entry positive);
// empty when the kernel is trivial.
std::vector<IntVec> kernel_basis(const RatMat& m);
std::vector<IntVec> kernel_basis(const IntMat& m);

// Scales a rational vector to its primitive integer representative
// (coprime entries). direction = true keeps orientation; otherwise the
// first nonzero entry is made positive. Zero vectors pass through.
IntVec primitive_vector(const RatVec& v, bool keep_direction = true);
IntVec primitive_vector(const IntVec& v, bool keep_direction = true);

Int gcd_of(const IntVec& v);

}  // namespace slag
