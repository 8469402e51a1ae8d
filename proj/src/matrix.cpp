#include "slagtoric/matrix.hpp"

namespace slag {

RatMat to_rat(const IntMat& m) {
    RatMat out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

Rat det(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
    RatMat a = m;
    const size_t n = a.rows();
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && a(pivot, c) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != c) {
            a.swap_rows(pivot, c);
            d = -d;
        }
        d *= a(c, c);
        for (size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) continue;
            Rat f = a(r, c) / a(c, c);
            for (size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return d;
}

Int det(const IntMat& m) {
    Rat d = det(to_rat(m));
    return to_int(d);
}

namespace {

// Row echelon form in place; returns pivot columns. Optionally carries an
// augmented right-hand side through the same row operations.
std::vector<size_t> echelon(RatMat& a, RatVec* rhs) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            a.swap_rows(p, r);
            if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        }
        Rat inv = 1 / a(r, c);
        for (size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        if (rhs) (*rhs)[r] *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
            if (rhs) (*rhs)[i] -= f * (*rhs)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t rank(const RatMat& m) {
    RatMat a = m;
    return echelon(a, nullptr).size();
}

std::optional<RatMat> inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
    const size_t n = m.rows();
    RatMat a(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    auto pivots = echelon(a, nullptr);
    if (pivots.size() != n) return std::nullopt;
    RatMat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
    return inv;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    RatMat e = a;
    RatVec rhs = b;
    auto pivots = echelon(e, &rhs);
    // Consistency: zero rows must have zero rhs.
    for (size_t i = pivots.size(); i < e.rows(); ++i)
        if (rhs[i] != 0) return std::nullopt;
    RatVec x(a.cols());
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rhs[k];
    return x;
}

}  // namespace slag
