#ifndef CYCTOPE_RATIONAL_HPP
#define CYCTOPE_RATIONAL_HPP

#include <boost/rational.hpp>
#include <string>

namespace cyctope {

// Exact rational arithmetic for paracycle images and Q/Z points.
// All quantities in this project have tiny denominators, so a machine-word
// rational is plenty; boost::rational keeps values in lowest terms.
using Rat = boost::rational<long long>;

long long rat_floor(const Rat& r);

// Fractional part, always in [0,1).
Rat rat_mod1(const Rat& r);

// Parses "p/q" (or a bare integer "p"). Throws InputError on junk or q <= 0.
Rat parse_rat(const std::string& text);

// Canonical "p/q" in lowest terms, q >= 1; e.g. "0/1", "-2/3".
std::string format_rat(const Rat& r);

}  // namespace cyctope

#endif  // CYCTOPE_RATIONAL_HPP
