#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace weylfold {

// All arithmetic in the library is exact. Rat is an arbitrary-precision
// rational; there is no floating point anywhere.
using Rat = mpq_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Parses "p/q" or "p". Rejects anything mpq does not accept exactly.
inline Rat rat_parse(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw invalid_input("invalid rational '" + s + "'");
    if (q.get_den() == 0)
        throw invalid_input("invalid rational '" + s + "': zero denominator");
    q.canonicalize();
    return q;
}

inline int rat_sign(const Rat& q) { return sgn(q); }

// mpq_class(num, den) does not canonicalize; always build fractions here.
inline Rat make_rat(long num, long den) {
    if (den == 0) throw invalid_input("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace weylfold
