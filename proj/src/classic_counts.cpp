#include "chorddia/classic_counts.hpp"

#include <string>

#include "chorddia/errors.hpp"

namespace chorddia {

BigCount CrossingPolynomial::evaluate(const BigCount& x) const
{
    BigCount acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

BigCount catalan_noncrossing(unsigned n)
{
    if (n == 0)
        throw DomainError("catalan_noncrossing: n must be positive");
    return exact_divide(factorial(2 * n), factorial(n) * factorial(n + 1), "catalan_noncrossing");
}

BigCount touchard_coefficient(unsigned n, unsigned j)
{
    if (j > n)
        throw DomainError("touchard_coefficient: j must not exceed n");
    return exact_divide((2 * j + 1) * binomial(2 * n + 1, n - j), 2 * n + 1,
                        "touchard_coefficient");
}

CrossingPolynomial touchard_polynomial(unsigned n)
{
    if (n == 0)
        throw DomainError("touchard_polynomial: n must be positive");

    // Right-hand side: sum_j (-1)^j t_{nj} x^{j(j+1)/2}.
    const std::size_t top = static_cast<std::size_t>(n) * (n + 1) / 2;
    std::vector<BigCount> poly(top + 1, 0);
    for (unsigned j = 0; j <= n; ++j) {
        const BigCount t = touchard_coefficient(n, j);
        poly[static_cast<std::size_t>(j) * (j + 1) / 2] += (j % 2 == 0) ? t : BigCount(-t);
    }

    // Divide by (1 - x) n times. Ascending long division by (1 - x) is a
    // running prefix sum; the final partial sum is the remainder.
    for (unsigned step = 0; step < n; ++step) {
        BigCount running = 0;
        for (auto& c : poly) {
            running += c;
            c = running;
        }
        if (poly.back() != 0)
            throw ConsistencyError("touchard_polynomial: nonzero remainder " + poly.back().str() +
                                   " dividing by (1 - x) for n = " + std::to_string(n));
        poly.pop_back();
    }

    CrossingPolynomial result{n, std::move(poly)};
    for (std::size_t j = 0; j < result.coefficients.size(); ++j)
        if (result.coefficients[j] < 0)
            throw ConsistencyError("touchard_polynomial: negative coefficient at x^" +
                                   std::to_string(j));
    return result;
}

StrictSequences hk_sequences(unsigned n_max)
{
    if (n_max == 0)
        throw DomainError("hk_sequences: n_max must be positive");
    StrictSequences seq;
    seq.a.reserve(n_max);
    seq.b.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        BigCount a;
        if (n == 1)
            a = 0;
        else if (n == 2)
            a = 1;
        else
            a = (2 * n - 1) * seq.a[n - 2] + seq.a[n - 3];
        seq.b.push_back(n == 1 ? a : a - seq.a[n - 2]);
        seq.a.push_back(std::move(a));
    }
    return seq;
}

} // namespace chorddia
