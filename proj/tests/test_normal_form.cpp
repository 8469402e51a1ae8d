#include <doctest.h>

#include <random>

#include "slagtoric/normal_form.hpp"

using namespace slag;

namespace {

// Independent oracle: exhaustive small-coefficient search for integer
// kernel vectors, reduced to a primitive, sign-normalized set.
std::vector<IntVec> brute_force_kernel(const RatMat& m, long bound) {
    std::vector<IntVec> found;
    const size_t d = m.cols();
    std::vector<long> cur(d, -bound);
    while (true) {
        IntVec v(d);
        bool zero = true;
        for (size_t i = 0; i < d; ++i) {
            v[i] = cur[i];
            if (cur[i] != 0) zero = false;
        }
        if (!zero) {
            bool in_kernel = true;
            for (size_t r = 0; r < m.rows() && in_kernel; ++r) {
                Rat s;
                for (size_t j = 0; j < d; ++j) s += m(r, j) * v[j];
                if (s != 0) in_kernel = false;
            }
            if (in_kernel) {
                IntVec p = primitive_vector(v, false);
                if (std::find(found.begin(), found.end(), p) == found.end()) found.push_back(p);
            }
        }
        size_t k = 0;
        while (k < d) {
            if (cur[k] < bound) {
                ++cur[k];
                break;
            }
            cur[k] = -bound;
            ++k;
        }
        if (k == d) break;
    }
    std::sort(found.begin(), found.end());
    return found;
}

bool is_row_echelon_hnf(const IntMat& h) {
    long last_pivot = -1;
    bool seen_zero_row = false;
    for (size_t i = 0; i < h.rows(); ++i) {
        long pivot = -1;
        for (size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) {
                pivot = (long)j;
                break;
            }
        if (pivot < 0) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;  // nonzero row after a zero row
        if (pivot <= last_pivot) return false;
        if (h(i, (size_t)pivot) < 0) return false;
        for (size_t k = 0; k < i; ++k)
            if (h(k, (size_t)pivot) < 0 || h(k, (size_t)pivot) >= h(i, (size_t)pivot)) return false;
        last_pivot = pivot;
    }
    return true;
}

IntMat random_int_matrix(std::mt19937_64& rng, size_t rows, size_t cols, int span) {
    IntMat m(rows, cols);
    std::uniform_int_distribution<int> d(-span, span);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("hnf identity") {
    IntMat id = IntMat::identity(3);
    auto [h, u] = hermite_normal_form(id);
    CHECK(h == id);
    CHECK(u == id);
}

TEST_CASE("hnf 2x2 example") {
    IntMat m{{2, 4}, {6, 8}};
    auto [h, u] = hermite_normal_form(m);
    CHECK(u * m == h);
    CHECK(abs(det(u)) == 1);
    CHECK(is_row_echelon_hnf(h));
    CHECK(h(1, 1) % h(0, 0) == 0);
}

TEST_CASE("hnf keeps zero rows zero") {
    IntMat m{{1, 2, 3}, {0, 0, 0}, {2, 4, 7}};
    auto [h, u] = hermite_normal_form(m);
    CHECK(u * m == h);
    // a zero row of the input stays in the row space as zero
    size_t zero_rows = 0;
    for (size_t i = 0; i < h.rows(); ++i) {
        bool z = true;
        for (size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) z = false;
        if (z) ++zero_rows;
    }
    CHECK(zero_rows == 1);
}

TEST_CASE("hnf property: U*m = H, |det U| = 1, echelon shape") {
    std::mt19937_64 rng(20260810);
    for (int iter = 0; iter < 200; ++iter) {
        size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        IntMat m = random_int_matrix(rng, rows, cols, 9);
        auto [h, u] = hermite_normal_form(m);
        CHECK(u * m == h);
        CHECK(abs(det(u)) == 1);
        CHECK(is_row_echelon_hnf(h));
    }
}

TEST_CASE("snf property: U*m*V = S, diagonal divisibility") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        IntMat m = random_int_matrix(rng, rows, cols, 9);
        auto [s, u, v] = smith_normal_form(m);
        CHECK(u * m * v == s);
        CHECK(abs(det(u)) == 1);
        CHECK(abs(det(v)) == 1);
        for (size_t i = 0; i < s.rows(); ++i)
            for (size_t j = 0; j < s.cols(); ++j)
                if (i != j) CHECK(s(i, j) == 0);
        size_t n = std::min(s.rows(), s.cols());
        for (size_t i = 0; i + 1 < n; ++i) {
            CHECK(s(i, i) >= 0);
            if (s(i, i) == 0) CHECK(s(i + 1, i + 1) == 0);
            if (s(i, i) != 0 && s(i + 1, i + 1) != 0) CHECK(s(i + 1, i + 1) % s(i, i) == 0);
        }
    }
}

TEST_CASE("kernel of the Example 2.3 ray matrix") {
    RatMat pi{{Rat(1), Rat(0), Rat(0), Rat(1, 3)},
              {Rat(0), Rat(1), Rat(0), Rat(1, 3)},
              {Rat(0), Rat(0), Rat(1), Rat(1, 3)}};
    auto k = kernel_basis(pi);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == IntVec{1, 1, 1, -3});
}

TEST_CASE("kernel of invertible matrix is empty") {
    RatMat m{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK(kernel_basis(m).empty());
}

TEST_CASE("kernel of [[1,1]] matches exhaustive search") {
    RatMat m{{Rat(1), Rat(1)}};
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == IntVec{1, -1});
    CHECK(brute_force_kernel(m, 3) == std::vector<IntVec>{k[0]});
}

TEST_CASE("kernel property: m*k = 0, saturated, right rank") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 150; ++iter) {
        size_t rows = 1 + rng() % 3, cols = 1 + rng() % 5;
        IntMat im = random_int_matrix(rng, rows, cols, 5);
        RatMat m = to_rat(im);
        auto ker = kernel_basis(m);
        CHECK(ker.size() == cols - rank(m));
        for (const auto& k : ker) {
            CHECK(gcd_of(k) <= 1);
            for (size_t r = 0; r < rows; ++r) {
                Rat s;
                for (size_t j = 0; j < cols; ++j) s += m(r, j) * k[j];
                CHECK(s == 0);
            }
        }
        if (!ker.empty()) {
            // Saturation certificate: the Smith form of the kernel matrix has
            // all elementary divisors equal to one.
            IntMat km(ker.size(), cols);
            for (size_t i = 0; i < ker.size(); ++i) km.set_row(i, ker[i]);
            auto [s, u, v] = smith_normal_form(km);
            for (size_t i = 0; i < ker.size(); ++i) CHECK(s(i, i) == 1);
        }
    }
}

TEST_CASE("primitive_vector") {
    CHECK(primitive_vector(IntVec{2, 4, -6}) == IntVec{1, 2, -3});
    CHECK(primitive_vector(IntVec{-2, 4}, false) == IntVec{1, -2});
    CHECK(primitive_vector(RatVec{Rat(1, 3), Rat(1, 3), Rat(1, 3)}) == IntVec{1, 1, 1});
    CHECK(primitive_vector(IntVec{0, 0}) == IntVec{0, 0});
}
