#include "chorddia/arithmetic.hpp"

#include <algorithm>
#include <string>

#include "chorddia/errors.hpp"

namespace chorddia {

BigCount factorial(unsigned n)
{
    BigCount r = 1;
    for (unsigned k = 2; k <= n; ++k)
        r *= k;
    return r;
}

BigCount odd_double_factorial(long m)
{
    if (m < -1 || (m % 2 == 0))
        throw DomainError("odd_double_factorial: argument must be odd and >= -1, got " +
                          std::to_string(m));
    BigCount r = 1;
    for (long k = 3; k <= m; k += 2)
        r *= k;
    return r;
}

BigCount binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigCount r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

BigCount power(const BigCount& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

BigCount exact_divide(const BigCount& num, const BigCount& den, std::string_view what)
{
    if (den == 0)
        throw ConsistencyError(std::string(what) + ": division by zero");
    BigCount q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw ConsistencyError(std::string(what) + ": inexact division " + num.str() + " / " +
                               den.str());
    return q;
}

BigCount exact_integer(const BigRational& r, std::string_view what)
{
    if (boost::multiprecision::denominator(r) != 1)
        throw ConsistencyError(std::string(what) + ": non-integral value " + r.str());
    return boost::multiprecision::numerator(r);
}

} // namespace chorddia
