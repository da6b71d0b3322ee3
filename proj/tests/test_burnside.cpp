#include <doctest.h>

#include "chorddia/burnside.hpp"
#include "chorddia/closed_forms.hpp"
#include "chorddia/errors.hpp"
#include "oracles.hpp"

using namespace chorddia;

namespace {

CycleType type(std::initializer_list<std::pair<unsigned, unsigned>> parts)
{
    CycleType t;
    for (auto [length, mult] : parts)
        t.add(length, mult);
    return t;
}

} // namespace

TEST_CASE("wreath_cycle_type_distribution examples")
{
    auto one = wreath_cycle_type_distribution(1);
    CHECK(one.entries == std::map<CycleType, BigCount>{{type({{1, 2}}), 1}, {type({{2, 1}}), 1}});

    auto two = wreath_cycle_type_distribution(2);
    CHECK(two.entries == std::map<CycleType, BigCount>{
                             {type({{1, 4}}), 1},
                             {type({{1, 2}, {2, 1}}), 2},
                             {type({{2, 2}}), 3},
                             {type({{4, 1}}), 2},
                         });
    CHECK(two.total() == 8);
    CHECK(wreath_cycle_type_distribution(3).total() == 48);
    CHECK_THROWS_AS(wreath_cycle_type_distribution(0), DomainError);
}

TEST_CASE("wreath distribution matches element enumeration")
{
    for (unsigned n = 1; n <= 6; ++n) {
        auto dist = wreath_cycle_type_distribution(n);
        CHECK(dist.entries == oracles::wreath_distribution_by_enumeration(n));
    }
}

TEST_CASE("wreath distribution totals and degrees")
{
    for (unsigned n = 1; n <= 20; ++n) {
        auto dist = wreath_cycle_type_distribution(n);
        CHECK(dist.total() == power(BigCount(2), n) * factorial(n));
        for (const auto& [t, count] : dist.entries) {
            CHECK(t.degree() == 2 * n);
            CHECK(count > 0);
        }
    }
}

TEST_CASE("wreath classes i^{2n/i} are counted by psi")
{
    for (unsigned n = 1; n <= 12; ++n) {
        auto dist = wreath_cycle_type_distribution(n);
        for (auto i : divisors(2 * n)) {
            CycleType t;
            t.add(static_cast<unsigned>(i), static_cast<unsigned>(2 * n / i));
            CHECK(dist.count_of(t) == psi(n, i));
        }
        CHECK(dist.count_of(type({{1, 2}, {2, n - 1}})) == psi_reflection(n));
    }
}

TEST_CASE("falling_factorial")
{
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(3, 5) == 0);
    CHECK(falling_factorial(3, 3) == 6);
    CHECK(falling_factorial(0, 0) == 1);
    CHECK(falling_factorial(0, 1) == 0);
}

TEST_CASE("burnside_count")
{
    CHECK(burnside_count(3, make_standard_group(StandardGroup::identity, 6)) == 15);
    CHECK(burnside_count(3, make_standard_group(StandardGroup::cyclic, 6)) == 5);
    CHECK(burnside_count(4, make_standard_group(StandardGroup::dihedral, 8)) == 17);
    CHECK_THROWS_AS(burnside_count(3, make_standard_group(StandardGroup::cyclic, 8)), DomainError);
    CHECK_THROWS_AS(burnside_count(0, make_standard_group(StandardGroup::cyclic, 2)), DomainError);

    for (unsigned n = 1; n <= 20; ++n) {
        CHECK(burnside_count(n, make_standard_group(StandardGroup::identity, 2 * n)) ==
              oracles::double_factorial_by_product(n));
        CHECK(burnside_count(n, make_standard_group(StandardGroup::cyclic, 2 * n)) ==
              cyclic_count(n));
        CHECK(burnside_count(n, make_standard_group(StandardGroup::dihedral, 2 * n)) ==
              dihedral_count(n));
    }
}

TEST_CASE("burnside_count for nonstandard groups")
{
    // The antipodal map alone: (15 + 7) / 2 orbits on 6 points.
    std::vector<GroupElement> antipodal{GroupElement::rotation(6, 3)};
    CHECK(burnside_count(3, generate_group(antipodal, 6)) == 11);

    // A single reflection through two points on 4 points: {13|24} and
    // {12|34} / {14|23} swapped, so 2 orbits.
    std::vector<GroupElement> flip{GroupElement::reflection(4, 0)};
    CHECK(burnside_count(2, generate_group(flip, 4)) == 2);

    // The full symmetric group on the points merges everything.
    std::vector<GroupElement> sym{GroupElement::from_images({1, 0, 2, 3, 4, 5}),
                                  GroupElement::rotation(6, 1)};
    CHECK(burnside_count(3, generate_group(sym, 6)) == 1);

    // A group class whose degree disagrees with 2n is rejected.
    std::map<CycleType, BigCount> bad{{type({{1, 4}}), 1}};
    CHECK_THROWS_AS(burnside_count(3, bad, 1), DomainError);
}
