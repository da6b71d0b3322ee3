#include "chorddia/group_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "chorddia/errors.hpp"

namespace chorddia {

BigCount euler_phi(std::uint64_t m)
{
    if (m == 0)
        throw DomainError("euler_phi: m must be positive");
    std::uint64_t result = m;
    std::uint64_t rest = m;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        while (rest % p == 0)
            rest /= p;
        result -= result / p;
    }
    if (rest > 1)
        result -= result / rest;
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t m)
{
    if (m == 0)
        throw DomainError("divisors: m must be positive");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0)
            continue;
        low.push_back(d);
        if (d != m / d)
            high.push_back(m / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

// ---------------------------------------------------------------- CycleType

CycleType CycleType::from_parts(std::span<const unsigned> parts)
{
    CycleType t;
    for (unsigned p : parts)
        t.add(p);
    return t;
}

void CycleType::add(unsigned length, unsigned multiplicity)
{
    if (length == 0)
        throw DomainError("CycleType: cycle length must be positive");
    if (multiplicity == 0)
        return;
    parts_[length] += multiplicity;
    degree_ += length * multiplicity;
}

unsigned CycleType::multiplicity(unsigned length) const
{
    auto it = parts_.find(length);
    return it == parts_.end() ? 0 : it->second;
}

std::string CycleType::to_string() const
{
    if (parts_.empty())
        return "()";
    std::ostringstream os;
    bool first = true;
    for (auto [length, mult] : parts_) {
        if (!first)
            os << ' ';
        first = false;
        os << length << '^' << mult;
    }
    return os.str();
}

// ------------------------------------------------------- IntegerPartitions

IntegerPartitions::iterator::iterator(unsigned n) : done_(false)
{
    if (n > 0)
        parts_.push_back(n);
}

IntegerPartitions::iterator& IntegerPartitions::iterator::operator++()
{
    // Strip trailing ones, decrement the last part > 1, then refill the
    // remainder greedily with parts no larger than the decremented one.
    unsigned rest = 0;
    while (!parts_.empty() && parts_.back() == 1) {
        parts_.pop_back();
        ++rest;
    }
    if (parts_.empty()) {
        done_ = true;
        return *this;
    }
    unsigned cap = --parts_.back();
    ++rest;
    while (rest > 0) {
        unsigned p = std::min(cap, rest);
        parts_.push_back(p);
        rest -= p;
    }
    return *this;
}

std::vector<CycleType> partitions(unsigned n)
{
    std::vector<CycleType> out;
    for (const auto& parts : IntegerPartitions(n))
        out.push_back(CycleType::from_parts(parts));
    return out;
}

// ------------------------------------------------------------ GroupElement

namespace {

unsigned checked_points(unsigned points, const char* who)
{
    if (points == 0)
        throw DomainError(std::string(who) + ": point count must be positive");
    return points;
}

} // namespace

GroupElement GroupElement::identity(unsigned points)
{
    return rotation(points, 0);
}

GroupElement GroupElement::rotation(unsigned points, unsigned shift)
{
    checked_points(points, "rotation");
    shift %= points;
    std::vector<Point> img(points);
    for (Point v = 0; v < points; ++v)
        img[v] = (v + shift) % points;
    GroupElement g(std::move(img));
    g.rigid_ = RigidForm{shift, false};
    return g;
}

GroupElement GroupElement::reflection(unsigned points, unsigned shift)
{
    checked_points(points, "reflection");
    shift %= points;
    std::vector<Point> img(points);
    for (Point v = 0; v < points; ++v)
        img[v] = (shift + points - v) % points;
    GroupElement g(std::move(img));
    g.rigid_ = RigidForm{shift, true};
    return g;
}

GroupElement GroupElement::from_images(std::vector<Point> images)
{
    checked_points(static_cast<unsigned>(images.size()), "from_images");
    std::vector<bool> seen(images.size(), false);
    for (Point v : images) {
        if (v >= images.size() || seen[v])
            throw DomainError("from_images: image array is not a bijection");
        seen[v] = true;
    }
    return GroupElement(std::move(images));
}

bool GroupElement::is_identity() const
{
    for (Point v = 0; v < images_.size(); ++v)
        if (images_[v] != v)
            return false;
    return true;
}

GroupElement GroupElement::inverse() const
{
    std::vector<Point> inv(images_.size());
    for (Point v = 0; v < images_.size(); ++v)
        inv[images_[v]] = v;
    GroupElement g(std::move(inv));
    if (rigid_) {
        unsigned n = size();
        g.rigid_ = rigid_->reflected ? *rigid_ : RigidForm{(n - rigid_->shift) % n, false};
    }
    return g;
}

GroupElement compose(const GroupElement& outer, const GroupElement& inner)
{
    if (outer.size() != inner.size())
        throw DomainError("compose: elements act on different point counts");
    const unsigned n = outer.size();
    std::vector<Point> img(n);
    for (Point v = 0; v < n; ++v)
        img[v] = outer.images_[inner.images_[v]];
    GroupElement g(std::move(img));
    if (outer.rigid_ && inner.rigid_) {
        const auto [a, fa] = *outer.rigid_;
        const auto [b, fb] = *inner.rigid_;
        // r_a r_b = r_{a+b}, r_a f_b = f_{a+b}, f_a r_b = f_{a-b}, f_a f_b = r_{a-b}
        unsigned shift = fa ? (a + n - b) % n : (a + b) % n;
        g.rigid_ = GroupElement::RigidForm{shift, fa != fb};
    }
    return g;
}

CycleType cycle_type_of(const GroupElement& g)
{
    const unsigned n = g.size();
    std::vector<bool> seen(n, false);
    CycleType t;
    for (Point start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        unsigned length = 0;
        for (Point v = start; !seen[v]; v = g(v)) {
            seen[v] = true;
            ++length;
        }
        t.add(length);
    }
    return t;
}

std::string to_string(StandardGroup kind)
{
    switch (kind) {
    case StandardGroup::identity: return "identity";
    case StandardGroup::cyclic: return "cyclic";
    case StandardGroup::dihedral: return "dihedral";
    }
    return "?";
}

std::optional<StandardGroup> parse_standard_group(std::string_view name)
{
    if (name == "identity")
        return StandardGroup::identity;
    if (name == "cyclic")
        return StandardGroup::cyclic;
    if (name == "dihedral")
        return StandardGroup::dihedral;
    return std::nullopt;
}

// --------------------------------------------------------------- PermGroup

PermGroup::PermGroup(unsigned points, std::vector<GroupElement> elements, std::string name)
    : points_(points), elements_(std::move(elements)), name_(std::move(name))
{
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PermGroup::contains(const GroupElement& g) const
{
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::map<CycleType, BigCount> PermGroup::cycle_type_classes() const
{
    std::map<CycleType, BigCount> classes;
    for (const auto& g : elements_)
        classes[cycle_type_of(g)] += 1;
    return classes;
}

PermGroup make_standard_group(StandardGroup kind, unsigned points)
{
    if (points == 0 || points % 2 != 0)
        throw DomainError("make_standard_group: point count must be even and positive, got " +
                          std::to_string(points));
    std::vector<GroupElement> elements;
    switch (kind) {
    case StandardGroup::identity:
        elements.push_back(GroupElement::identity(points));
        break;
    case StandardGroup::dihedral:
        for (unsigned s = 0; s < points; ++s)
            elements.push_back(GroupElement::reflection(points, s));
        [[fallthrough]];
    case StandardGroup::cyclic:
        for (unsigned s = 0; s < points; ++s)
            elements.push_back(GroupElement::rotation(points, s));
        break;
    }
    return PermGroup(points, std::move(elements), to_string(kind));
}

PermGroup generate_group(std::span<const GroupElement> generators, unsigned points,
                         std::size_t cap)
{
    for (const auto& g : generators)
        if (g.size() != points)
            throw DomainError("generate_group: generator acts on " + std::to_string(g.size()) +
                              " points, expected " + std::to_string(points));

    std::set<GroupElement> seen{GroupElement::identity(points)};
    std::vector<GroupElement> frontier{GroupElement::identity(points)};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& h : frontier) {
            for (const auto& g : generators) {
                GroupElement gh = compose(g, h);
                if (seen.contains(gh))
                    continue;
                if (seen.size() >= cap)
                    throw ResourceError("generate_group: closure exceeds " + std::to_string(cap) +
                                        " elements");
                seen.insert(gh);
                next.push_back(std::move(gh));
            }
        }
        frontier = std::move(next);
    }
    return PermGroup(points, std::vector<GroupElement>(seen.begin(), seen.end()), "custom");
}

} // namespace chorddia
