#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace flowface {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

BigInt int_pow(const BigInt& base, unsigned exp);

}  // namespace flowface
