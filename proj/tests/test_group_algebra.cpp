#include <doctest.h>

#include <set>

#include "chorddia/errors.hpp"
#include "chorddia/group_algebra.hpp"
#include "oracles.hpp"

using namespace chorddia;

TEST_CASE("euler_phi")
{
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK_THROWS_AS(euler_phi(0), DomainError);

    for (std::uint64_t m = 1; m <= 200; ++m) {
        CHECK(euler_phi(m) == oracles::phi_by_gcd(m));
        BigCount sum = 0;
        for (auto d : divisors(m))
            sum += euler_phi(d);
        CHECK(sum == m);
    }
}

TEST_CASE("divisors")
{
    using V = std::vector<std::uint64_t>;
    CHECK(divisors(1) == V{1});
    CHECK(divisors(6) == V{1, 2, 3, 6});
    CHECK(divisors(22) == V{1, 2, 11, 22});
    CHECK_THROWS_AS(divisors(0), DomainError);
    for (std::uint64_t m = 1; m <= 300; ++m)
        CHECK(divisors(m) == oracles::divisors_by_trial(m));
}

TEST_CASE("partitions")
{
    SUBCASE("small cases")
    {
        auto one = partitions(1);
        REQUIRE(one.size() == 1);
        CHECK(one[0].parts() == std::map<unsigned, unsigned>{{1, 1}});

        auto zero = partitions(0);
        REQUIRE(zero.size() == 1);
        CHECK(zero[0].empty());
        CHECK(zero[0].degree() == 0);

        CHECK(partitions(4).size() == 5);
        CHECK(partitions(10).size() == 42);
    }

    SUBCASE("descending lexicographic order")
    {
        std::vector<std::vector<unsigned>> seen;
        for (const auto& p : IntegerPartitions(4))
            seen.push_back(p);
        CHECK(seen == std::vector<std::vector<unsigned>>{
                          {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    }

    SUBCASE("count matches p(n) and every type has degree n")
    {
        for (unsigned n = 0; n <= 30; ++n) {
            auto all = partitions(n);
            CHECK(all.size() == oracles::partition_count(n));
            std::set<CycleType> distinct(all.begin(), all.end());
            CHECK(distinct.size() == all.size());
            for (const auto& t : all)
                CHECK(t.degree() == n);
        }
    }
}

TEST_CASE("CycleType bookkeeping")
{
    CycleType t;
    t.add(2, 3);
    t.add(1, 2);
    t.add(2);
    CHECK(t.degree() == 10);
    CHECK(t.multiplicity(2) == 4);
    CHECK(t.multiplicity(5) == 0);
    CHECK(t.to_string() == "1^2 2^4");
    t.add(7, 0);
    CHECK(t.multiplicity(7) == 0);
    CHECK_THROWS_AS(t.add(0), DomainError);

    const unsigned parts[] = {2, 1, 2, 2, 2, 1};
    CHECK(CycleType::from_parts(parts) == t);
}

TEST_CASE("cycle_type_of")
{
    CHECK(cycle_type_of(GroupElement::identity(6)).parts() == std::map<unsigned, unsigned>{{1, 6}});
    CHECK(cycle_type_of(GroupElement::rotation(6, 1)).parts() ==
          std::map<unsigned, unsigned>{{6, 1}});
    CHECK(cycle_type_of(GroupElement::rotation(6, 2)).parts() ==
          std::map<unsigned, unsigned>{{3, 2}});
    // reflections of an even polygon: through two points or through two edges
    CHECK(cycle_type_of(GroupElement::reflection(6, 0)).parts() ==
          std::map<unsigned, unsigned>{{1, 2}, {2, 2}});
    CHECK(cycle_type_of(GroupElement::reflection(6, 1)).parts() ==
          std::map<unsigned, unsigned>{{2, 3}});
}

TEST_CASE("GroupElement forms")
{
    CHECK_THROWS_AS(GroupElement::from_images({0, 0, 1}), DomainError);
    CHECK_THROWS_AS(GroupElement::from_images({0, 3, 1}), DomainError);
    CHECK_THROWS_AS(GroupElement::from_images({}), DomainError);

    auto g = GroupElement::from_images({1, 2, 0, 3});
    CHECK(compose(g, g.inverse()).is_identity());
    CHECK_FALSE(g.rigid_form().has_value());
    CHECK_THROWS_AS(compose(g, GroupElement::identity(6)), DomainError);

    // Rigid forms survive composition and inversion and agree with the images.
    const unsigned points = 8;
    std::vector<GroupElement> rigid;
    for (unsigned s = 0; s < points; ++s) {
        rigid.push_back(GroupElement::rotation(points, s));
        rigid.push_back(GroupElement::reflection(points, s));
    }
    auto expand = [&](GroupElement::RigidForm f) {
        return f.reflected ? GroupElement::reflection(points, f.shift)
                           : GroupElement::rotation(points, f.shift);
    };
    for (const auto& a : rigid) {
        REQUIRE(a.rigid_form());
        CHECK(expand(*a.inverse().rigid_form()) == a.inverse());
        for (const auto& b : rigid) {
            auto ab = compose(a, b);
            REQUIRE(ab.rigid_form());
            CHECK(expand(*ab.rigid_form()) == ab);
            for (Point v = 0; v < points; ++v)
                CHECK(ab(v) == a(b(v)));
        }
    }
}

TEST_CASE("make_standard_group")
{
    CHECK(make_standard_group(StandardGroup::cyclic, 6).order() == 6);
    CHECK(make_standard_group(StandardGroup::dihedral, 6).order() == 12);
    CHECK(make_standard_group(StandardGroup::identity, 8).order() == 1);
    CHECK(make_standard_group(StandardGroup::dihedral, 2).order() == 2);
    for (unsigned points = 4; points <= 40; points += 2)
        CHECK(make_standard_group(StandardGroup::dihedral, points).order() == 2 * points);
    CHECK_THROWS_AS(make_standard_group(StandardGroup::cyclic, 7), DomainError);
    CHECK_THROWS_AS(make_standard_group(StandardGroup::dihedral, 0), DomainError);

    for (unsigned n = 1; n <= 12; ++n) {
        const unsigned points = 2 * n;
        for (auto kind : {StandardGroup::identity, StandardGroup::cyclic, StandardGroup::dihedral}) {
            auto g = make_standard_group(kind, points);
            for (const auto& e : g.elements()) {
                CHECK(cycle_type_of(e).degree() == points);
                CHECK(g.contains(e.inverse()));
            }
        }
        // phi(i) rotations of each cycle type i^{2n/i}
        auto classes = make_standard_group(StandardGroup::cyclic, points).cycle_type_classes();
        CHECK(classes.size() == divisors(points).size());
        for (auto i : divisors(points)) {
            CycleType t;
            t.add(static_cast<unsigned>(i), static_cast<unsigned>(points / i));
            CHECK(classes.at(t) == euler_phi(i));
        }
    }
}

TEST_CASE("group closure and Lagrange on small point sets")
{
    for (unsigned points : {2u, 4u, 6u}) {
        BigCount full = factorial(points);
        for (auto kind : {StandardGroup::identity, StandardGroup::cyclic, StandardGroup::dihedral}) {
            auto g = make_standard_group(kind, points);
            CHECK(full % g.order() == 0);
            for (const auto& a : g.elements())
                for (const auto& b : g.elements())
                    CHECK(g.contains(compose(a, b)));
        }
    }
}

TEST_CASE("generate_group")
{
    CHECK(generate_group({}, 6).order() == 1);

    std::vector<GroupElement> rot{GroupElement::rotation(6, 1)};
    CHECK(generate_group(rot, 6) == make_standard_group(StandardGroup::cyclic, 6));

    std::vector<GroupElement> dih{GroupElement::rotation(6, 1), GroupElement::reflection(6, 0)};
    auto d6 = generate_group(dih, 6);
    CHECK(d6.order() == 12);
    CHECK(d6 == make_standard_group(StandardGroup::dihedral, 6));

    for (unsigned points = 2; points <= 16; points += 2) {
        std::vector<GroupElement> gens{GroupElement::rotation(points, 1),
                                       GroupElement::reflection(points, 0)};
        CHECK(generate_group(gens, points) ==
              make_standard_group(StandardGroup::dihedral, points));
    }

    std::vector<GroupElement> mixed{GroupElement::rotation(6, 1), GroupElement::rotation(8, 1)};
    CHECK_THROWS_AS(generate_group(mixed, 6), DomainError);

    // S_8 via a transposition and an 8-cycle has 40320 elements
    std::vector<GroupElement> sym{GroupElement::from_images({1, 0, 2, 3, 4, 5, 6, 7}),
                                  GroupElement::rotation(8, 1)};
    CHECK_THROWS_AS(generate_group(sym, 8, 1000), ResourceError);
    CHECK(generate_group(sym, 8).order() == 40320);
}
