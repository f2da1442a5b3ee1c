#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace finik {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Every numeric quantity in the library (linking
// numbers, surgery ratios, invariant values, Dedekind sums) is a Rat;
// there is no floating point anywhere.
using Rat = boost::multiprecision::cpp_rational;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct dimension_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical "p/q" rendering; integers print without the "/1".
inline std::string rat_to_string(const Rat& r)
{
    if (rat_den(r) == 1)
        return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Parses "p", "p/q", also tolerating a Unicode minus sign.
Rat rat_from_string(std::string s);

inline Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline int sign_of(const Rat& r)
{
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

} // namespace finik
