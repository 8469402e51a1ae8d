#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slag {

// Exact arithmetic types. mpq_class keeps values in canonical form
// (reduced, positive denominator), which is exactly the contract the
// rest of the library relies on.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_int: value is not an integer");
    return q.get_num();
}

// Serialize as "p" or "p/q"; parses the same formats back.
inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline RatVec to_rat_vec(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

// Exact complex rationals (deformation parameters in the smoothing module).
struct GaussRat {
    Rat re, im;

    bool operator==(const GaussRat&) const = default;
};

inline GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
}

// Im(i^k * z) for exact Gaussian rationals; k taken mod 4.
inline Rat im_of_ipow_times(int k, const GaussRat& z) {
    switch (((k % 4) + 4) % 4) {
        case 0: return z.im;            // z
        case 1: return z.re;            // iz
        case 2: return -z.im;           // -z
        default: return -z.re;          // -iz
    }
}

}  // namespace slag
