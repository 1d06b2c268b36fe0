#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxfano {

// All arithmetic in this library is exact: arbitrary-precision integers and
// reduced rationals.  No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

template <typename It>
Int gcd_of(It first, It last) {
    Int g = 0;
    for (; first != last; ++first) g = gcd(g, Int(*first));
    return g;
}

template <typename Range>
Int gcd_of(const Range& r) {
    return gcd_of(r.begin(), r.end());
}

template <typename It>
Int lcm_of(It first, It last) {
    Int l = 1;
    for (; first != last; ++first) l = lcm(l, Int(*first));
    return l;
}

template <typename Range>
Int lcm_of(const Range& r) {
    return lcm_of(r.begin(), r.end());
}

// Renders p/q, or just p when q = 1.  Rationals are always kept reduced with
// positive denominator (mpq_class canonical form).
inline std::string to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parses "p" or "p/q".
inline Rat parse_rational(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace coxfano
