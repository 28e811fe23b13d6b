#ifndef MUTWB_INTEGER_HPP
#define MUTWB_INTEGER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mutwb {

/// Arbitrary-precision signed integer used for every arrow count, matrix
/// entry and polynomial coefficient. Expression templates are off so that
/// `auto` and perfect forwarding always see plain values.
using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline std::size_t hash_integer(const Integer& x) {
  return std::hash<Integer>{}(x);
}

inline bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline std::string to_string(const Integer& x) { return x.str(); }

} // namespace mutwb

#endif
