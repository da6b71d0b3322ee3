#include "chorddia/burnside.hpp"

#include <string>

#include "chorddia/errors.hpp"

namespace chorddia {

BigCount WreathTypeDistribution::total() const
{
    BigCount sum = 0;
    for (const auto& [type, count] : entries)
        sum += count;
    return sum;
}

BigCount WreathTypeDistribution::count_of(const CycleType& type) const
{
    auto it = entries.find(type);
    return it == entries.end() ? BigCount(0) : it->second;
}

namespace {

// Number of permutations of S_n with l-cycles of multiplicity m_l.
BigCount class_size(unsigned n, const CycleType& type)
{
    BigCount den = 1;
    for (auto [length, mult] : type.parts())
        den *= power(length, mult) * factorial(mult);
    return exact_divide(factorial(n), den, "symmetric group class size");
}

} // namespace

WreathTypeDistribution wreath_cycle_type_distribution(unsigned n)
{
    if (n == 0)
        throw DomainError("wreath_cycle_type_distribution: n must be positive");

    WreathTypeDistribution dist{n, {}};
    for (const auto& tau : partitions(n)) {
        // A cycle of tau of length l lifts to two l-cycles when an even
        // number of its flips are nontrivial, otherwise to one 2l-cycle;
        // 2^{l-1} flip patterns each way. Length classes combine independently.
        std::map<CycleType, BigCount> partial{{CycleType{}, class_size(n, tau)}};
        for (auto [length, mult] : tau.parts()) {
            const BigCount per_class = power(BigCount(2), (length - 1) * mult);
            std::map<CycleType, BigCount> next;
            for (const auto& [type, count] : partial) {
                for (unsigned split = 0; split <= mult; ++split) {
                    CycleType t = type;
                    t.add(length, 2 * split);
                    t.add(2 * length, mult - split);
                    next[t] += count * binomial(mult, split) * per_class;
                }
            }
            partial = std::move(next);
        }
        for (auto& [type, count] : partial)
            dist.entries[type] += count;
    }
    return dist;
}

BigCount falling_factorial(const BigCount& a, unsigned k)
{
    BigCount r = 1;
    for (unsigned j = 0; j < k; ++j) {
        BigCount factor = a - j;
        if (factor <= 0)
            return 0;
        r *= factor;
    }
    return r;
}

BigCount burnside_count(unsigned n, const std::map<CycleType, BigCount>& group_classes,
                        const BigCount& group_order)
{
    const auto wreath = wreath_cycle_type_distribution(n);
    BigCount sum = 0;
    for (const auto& [pi, pi_count] : wreath.entries) {
        for (const auto& [eta, eta_count] : group_classes) {
            if (eta.degree() != 2 * n)
                throw DomainError("burnside_count: group class of degree " +
                                  std::to_string(eta.degree()) + ", expected " +
                                  std::to_string(2 * n));
            BigCount term = pi_count * eta_count;
            for (auto [length, mult] : pi.parts()) {
                term *= power(length, mult) * falling_factorial(eta.multiplicity(length), mult);
                if (term == 0)
                    break;
            }
            sum += term;
        }
    }
    const BigCount den = power(BigCount(2), n) * factorial(n) * group_order;
    return exact_divide(sum, den, "burnside_count");
}

BigCount burnside_count(unsigned n, const PermGroup& group)
{
    if (n == 0)
        throw DomainError("burnside_count: n must be positive");
    if (group.points() != 2 * n)
        throw DomainError("burnside_count: group acts on " + std::to_string(group.points()) +
                          " points, expected " + std::to_string(2 * n));
    return burnside_count(n, group.cycle_type_classes(), group.order());
}

} // namespace chorddia
