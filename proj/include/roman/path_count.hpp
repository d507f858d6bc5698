#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace roman {

using BigInt = boost::multiprecision::cpp_int;

// Exact counts of minimal Roman dominating functions on paths P_n, split by
// the decision taken at the first vertex. All require n >= 1.
BigInt count_prefix2(int n);      // first vertex assigned 2
BigInt count_prefix_not2(int n);  // first vertex decided not to be 2
BigInt count_path(int n);         // total
BigInt count_path_forest(const std::vector<int>& lengths);  // product over components

// count_path(n) / count_path(n-1); requires n >= 10.
double growth_estimate(int n);

}  // namespace roman
