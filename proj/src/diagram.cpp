#include "chorddia/diagram.hpp"

#include <algorithm>
#include <string>

#include "chorddia/errors.hpp"

namespace chorddia {

void to_json(nlohmann::json& j, const ChordList& list)
{
    auto chords = nlohmann::json::array();
    for (const auto& c : list.chords)
        chords.push_back({c.a, c.b});
    j = nlohmann::json{{"n", list.n}, {"chords", std::move(chords)}};
}

void from_json(const nlohmann::json& j, ChordList& list)
{
    list.n = j.at("n").get<unsigned>();
    list.chords.clear();
    for (const auto& c : j.at("chords")) {
        if (!c.is_array() || c.size() != 2)
            throw DomainError("chord list: each chord must be a pair [a, b]");
        list.chords.push_back({c[0].get<Point>(), c[1].get<Point>()});
    }
}

// ------------------------------------------------------------ ChordDiagram

ChordDiagram ChordDiagram::from_partners(std::vector<Point> partner)
{
    if (partner.empty() || partner.size() % 2 != 0)
        throw DomainError("ChordDiagram: point count must be even and positive");
    const auto size = partner.size();
    for (Point v = 0; v < size; ++v) {
        Point w = partner[v];
        if (w >= size || w == v || partner[w] != v)
            throw DomainError("ChordDiagram: partner array is not a fixed-point-free involution");
    }
    return ChordDiagram(std::move(partner));
}

ChordDiagram ChordDiagram::from_chords(const ChordList& list)
{
    if (list.n == 0 || list.chords.size() != list.n)
        throw DomainError("ChordDiagram: expected " + std::to_string(list.n) + " chords, got " +
                          std::to_string(list.chords.size()));
    const Point size = 2 * list.n;
    std::vector<Point> partner(size, size);
    for (const auto& [a, b] : list.chords) {
        if (a < 1 || b < 1 || a > size || b > size || a == b)
            throw DomainError("ChordDiagram: chord endpoint out of range [1, 2n]");
        if (partner[a - 1] != size || partner[b - 1] != size)
            throw DomainError("ChordDiagram: point used by two chords");
        partner[a - 1] = b - 1;
        partner[b - 1] = a - 1;
    }
    return ChordDiagram(std::move(partner));
}

ChordList ChordDiagram::chords() const
{
    ChordList list;
    list.n = order();
    for (Point v = 0; v < points(); ++v)
        if (v < partner_[v])
            list.chords.push_back({v + 1, partner_[v] + 1});
    return list;
}

// ----------------------------------------------------------------- actions

ChordDiagram apply(const GroupElement& g, const ChordDiagram& d)
{
    if (g.size() != d.points())
        throw DomainError("apply: group element acts on " + std::to_string(g.size()) +
                          " points, diagram has " + std::to_string(d.points()));
    std::vector<Point> img(d.points());
    for (Point v = 0; v < d.points(); ++v)
        img[g(v)] = g(d.partner_[v]);
    return ChordDiagram(std::move(img));
}

ChordDiagram canonical_form(const ChordDiagram& d, const PermGroup& group)
{
    if (group.points() != d.points())
        throw DomainError("canonical_form: group acts on " + std::to_string(group.points()) +
                          " points, diagram has " + std::to_string(d.points()));
    ChordDiagram best = d;
    for (const auto& g : group.elements()) {
        ChordDiagram image = apply(g, d);
        if (image < best)
            best = std::move(image);
    }
    return best;
}

OrbitProbe probe_orbit(std::span<const Point> partner, const PermGroup& group,
                       std::vector<Point>& scratch)
{
    const auto size = partner.size();
    scratch.resize(size);
    OrbitProbe probe{true, 0};
    for (const auto& g : group.elements()) {
        const auto img = g.images();
        for (std::size_t v = 0; v < size; ++v)
            scratch[img[v]] = img[partner[v]];
        auto cmp = std::lexicographical_compare_three_way(scratch.begin(), scratch.end(),
                                                          partner.begin(), partner.end());
        if (cmp < 0)
            return OrbitProbe{false, 0};
        if (cmp == 0)
            ++probe.stabilizer;
    }
    return probe;
}

unsigned crossings(const ChordDiagram& d)
{
    const auto chords = d.chords().chords;
    unsigned count = 0;
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            // chords are sorted by a, so chords[i].a < chords[j].a
            const auto [a, b] = chords[i];
            const auto [c, e] = chords[j];
            if (c < b && b < e)
                ++count;
        }
    return count;
}

bool is_strict(const ChordDiagram& d)
{
    const Point size = d.points();
    for (Point v = 0; v < size; ++v)
        if (d.partner(v) == (v + 1) % size)
            return false;
    return true;
}

// -------------------------------------------------------------- enumeration

DiagramEnumerator::DiagramEnumerator(unsigned n)
    : buffer_(std::vector<Point>(2 * static_cast<std::size_t>(n), kUnmatched))
{
    if (n == 0)
        throw DomainError("DiagramEnumerator: n must be positive");
}

void DiagramEnumerator::reset()
{
    std::fill(buffer_.partner_.begin(), buffer_.partner_.end(), kUnmatched);
}

void DiagramEnumerator::check_branch(Point first_partner) const
{
    if (first_partner == 0 || first_partner >= buffer_.points())
        throw DomainError("DiagramEnumerator: branch partner must lie in [1, 2n)");
}

std::vector<ChordDiagram> all_diagrams(unsigned n)
{
    std::vector<ChordDiagram> out;
    DiagramEnumerator(n).for_each([&](const ChordDiagram& d) { out.push_back(d); });
    return out;
}

} // namespace chorddia
