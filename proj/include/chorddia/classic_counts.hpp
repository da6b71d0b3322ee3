#pragma once

#include <vector>

#include "chorddia/arithmetic.hpp"

namespace chorddia {

/// coefficients[j] = number of diagrams of order n with exactly j crossings,
/// for j = 0 .. n(n-1)/2.
struct CrossingPolynomial {
    unsigned n = 0;
    std::vector<BigCount> coefficients;

    BigCount evaluate(const BigCount& x) const;
    friend bool operator==(const CrossingPolynomial&, const CrossingPolynomial&) = default;
};

/// Cumulative strict counts a_{2n} and per-order strict counts b_{2n}.
/// Index 0 holds order 1, so a[k] is a_{2(k+1)}.
struct StrictSequences {
    std::vector<BigCount> a;
    std::vector<BigCount> b;

    const BigCount& a_of(unsigned n) const { return a.at(n - 1); }
    const BigCount& b_of(unsigned n) const { return b.at(n - 1); }
};

// (2n)! / (n! (n+1)!)
BigCount catalan_noncrossing(unsigned n);

// (2j+1)/(2n+1) * C(2n+1, n-j), asserted integral.
BigCount touchard_coefficient(unsigned n, unsigned j);

CrossingPolynomial touchard_polynomial(unsigned n);

StrictSequences hk_sequences(unsigned n_max);

} // namespace chorddia
