// Exact-integer combinatorics: binomials, Stirling numbers of the second
// kind, factorials, integer powers and elementary symmetric sums.  All
// counting formulas in this project go through ExactInt; nothing here ever
// touches floating point.

#ifndef SANDWICH_EXACT_INT_HPP
#define SANDWICH_EXACT_INT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace sandwich {

using ExactInt = boost::multiprecision::cpp_int;

// C(k, mu); 0 when mu > k.  Requires k, mu >= 0.
ExactInt binom(int k, int mu);

// S(k, mu), Stirling second kind; 0 when mu > k.  Requires k, mu >= 0.
ExactInt stirling2(int k, int mu);

// k! for k >= 0.
ExactInt factorial(int k);

// base^exp for exp >= 0 (0^0 = 1).
ExactInt ipow(ExactInt base, int exp);

// Elementary symmetric sums of the given values: result[mu] =
// sum over mu-subsets K of the product of values over K; result[0] = 1.
std::vector<ExactInt> elementary_symmetric(const std::vector<int>& values);

}  // namespace sandwich

#endif  // SANDWICH_EXACT_INT_HPP
