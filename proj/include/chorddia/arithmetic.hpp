#pragma once

#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chorddia {

// Every count in the library is exact; (2n-1)!! overflows 64 bits at n = 20.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigCount factorial(unsigned n);

// m!! for odd m >= -1, with (-1)!! = 1.
BigCount odd_double_factorial(long m);

BigCount binomial(unsigned n, unsigned k);

BigCount power(const BigCount& base, unsigned exponent);

// num / den, throwing ConsistencyError naming `what` if the division is not exact.
BigCount exact_divide(const BigCount& num, const BigCount& den, std::string_view what);

// Integer value of r, throwing ConsistencyError if r is not an integer.
BigCount exact_integer(const BigRational& r, std::string_view what);

} // namespace chorddia
