#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schub {

// All arithmetic in this library is exact. Determinants at n = 6..7 exceed
// native word size by a wide margin, so the integer type is arbitrary
// precision throughout.
using Int = boost::multiprecision::cpp_int;

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// lo * (lo+1) * ... * hi; the empty range (lo > hi) is 1.
inline Int range_product(long lo, long hi) {
    Int r = 1;
    for (long t = lo; t <= hi; ++t) r *= t;
    return r;
}

}  // namespace schub
