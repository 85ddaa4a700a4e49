#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "preftriads/error.hpp"

namespace preftriads {

// Exact arbitrary-precision count; factorials outgrow fixed-width integers
// quickly and every division in the closed forms below must be exact.
using BigCount = boost::multiprecision::cpp_int;

BigCount factorial(std::uint32_t n);

// Number of elements of order 3 in the symmetric group on n symbols:
//   sum over m = 1..floor(n/3) of n! / ((n-3m)! * m! * 3^m).
// Zero for n < 3 (the sum is empty). n >= 1.
BigCount order3_count(std::uint32_t n);

// Number of triad equivalence classes on n alternatives, n >= 2:
//   ( n!*(n!+3) + 2*(order3_count(n)+1) ) / 6.
// The division is exact for every n >= 2; a nonzero remainder throws
// std::logic_error.
BigCount class_count(std::uint32_t n);

// Class counts split by the shape of the representative (identity, s, p):
//   all_identical   (id, id, id)                        -> 1
//   two_identical   (id, id, s), s != id                -> n! - 1
//   order3_pair     (id, s, s^2), s of order 3          -> order3_count(n)/2
//   generic         everything else                     -> the remainder / 6
// The four components always sum to class_count(n).
struct OrbitCaseCounts {
  BigCount all_identical;
  BigCount two_identical;
  BigCount order3_pair;
  BigCount generic;

  BigCount total() const {
    return all_identical + two_identical + order3_pair + generic;
  }
};

OrbitCaseCounts orbit_case_counts(std::uint32_t n);

}  // namespace preftriads
