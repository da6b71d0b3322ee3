#pragma once

#include <map>

#include "chorddia/arithmetic.hpp"
#include "chorddia/group_algebra.hpp"

namespace chorddia {

/// Cycle types of the elements of S_n wr S_2 acting on the 2n cells of an
/// n x 2 matrix, with the number of elements of each type.
struct WreathTypeDistribution {
    unsigned n = 0;
    std::map<CycleType, BigCount> entries;

    BigCount total() const;
    BigCount count_of(const CycleType& type) const;
};

WreathTypeDistribution wreath_cycle_type_distribution(unsigned n);

// a (a-1) ... (a-k+1); 1 for k = 0 and 0 once the product passes zero.
BigCount falling_factorial(const BigCount& a, unsigned k);

/// Number of G-orbits of perfect matchings on 2n points, evaluated
/// class-by-class over wreath cycle types and the cycle types of G.
/// Throws DomainError if G does not act on 2n points.
BigCount burnside_count(unsigned n, const PermGroup& group);

// Same sum with G given by its cycle-type classes and order.
BigCount burnside_count(unsigned n, const std::map<CycleType, BigCount>& group_classes,
                        const BigCount& group_order);

} // namespace chorddia
