#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptri {

// Exact scalars. No floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline int sign(const Int& a) { return sgn(a); }
inline int sign(const Rat& a) { return sgn(a); }

// mpq_class does not canonicalize two-argument constructions on its own
inline Rat frac(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}
inline Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

// floor(q) as an integer
inline Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
}

// Divides the vector by the gcd of its entries. If make_leading_positive,
// also flips sign so the first nonzero entry is positive. Zero vectors pass
// through unchanged.
inline void primitive_normalize(std::vector<Int>& v, bool make_leading_positive = true) {
    Int g = 0;
    for (const Int& a : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 0) return;
    for (Int& a : v) a /= g;
    if (make_leading_positive) {
        for (const Int& a : v) {
            if (a != 0) {
                if (a < 0)
                    for (Int& b : v) b = -b;
                break;
            }
        }
    }
}

// Clears denominators: returns integer vector proportional to the rational
// input by a positive factor.
inline std::vector<Int> clear_denominators(const std::vector<Rat>& v) {
    Int lcm = 1;
    for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Int> out;
    out.reserve(v.size());
    for (const Rat& q : v) out.push_back(q.get_num() * (lcm / q.get_den()));
    return out;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ptri
