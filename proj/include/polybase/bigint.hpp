#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace polybase {

// All counts, coefficients and determinants are exact; fixed-width integers
// never appear in public results.
using BigInt = boost::multiprecision::cpp_int;

// Finite sequence of exact integers, indexed from 0.
using IntSequence = std::vector<BigInt>;

} // namespace polybase
