#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chorddia/group_algebra.hpp"

namespace chorddia {

/// 1-based serialized form of a diagram: chords (a, b) with a < b, sorted by a.
struct ChordList {
    struct Chord {
        Point a;
        Point b;
        friend bool operator==(const Chord&, const Chord&) = default;
    };

    unsigned n = 0;
    std::vector<Chord> chords;

    friend bool operator==(const ChordList&, const ChordList&) = default;
};

void to_json(nlohmann::json& j, const ChordList& list);
void from_json(const nlohmann::json& j, ChordList& list);

/// A perfect matching on the 2n circle points. The circle itself is implicit
/// in the cyclic order of [0, 2n); partner(v) is the other end of v's chord.
class ChordDiagram {
public:
    // Throws DomainError unless partner is a fixed-point-free involution.
    static ChordDiagram from_partners(std::vector<Point> partner);
    static ChordDiagram from_chords(const ChordList& list);

    unsigned points() const { return static_cast<unsigned>(partner_.size()); }
    unsigned order() const { return points() / 2; }
    Point partner(Point v) const { return partner_[v]; }
    std::span<const Point> partners() const { return partner_; }

    ChordList chords() const;

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
    friend auto operator<=>(const ChordDiagram& a, const ChordDiagram& b) { return a.partner_ <=> b.partner_; }

private:
    explicit ChordDiagram(std::vector<Point> partner) : partner_(std::move(partner)) {}

    std::vector<Point> partner_;

    friend class DiagramEnumerator;
    friend ChordDiagram apply(const GroupElement& g, const ChordDiagram& d);
};

// g.D, defined by partner'[g(v)] = g(partner[v]). Throws DomainError on size mismatch.
ChordDiagram apply(const GroupElement& g, const ChordDiagram& d);

// Lexicographically least partner array in the G-orbit of d.
ChordDiagram canonical_form(const ChordDiagram& d, const PermGroup& group);

struct OrbitProbe {
    bool canonical = false;   // d is the least element of its orbit
    std::size_t stabilizer = 0;  // only meaningful when canonical
};

/// Single pass over the group deciding whether d is its own canonical form,
/// bailing out at the first smaller image. `scratch` is reused across calls.
OrbitProbe probe_orbit(std::span<const Point> partner, const PermGroup& group,
                       std::vector<Point>& scratch);

// Number of interleaving chord pairs a < c < b < d.
unsigned crossings(const ChordDiagram& d);

// True iff no chord joins circle-adjacent points (v, v+1 mod 2n).
bool is_strict(const ChordDiagram& d);

/// Depth-first enumeration of all (2n-1)!! diagrams on 2n points: the
/// smallest unmatched point is joined to each larger unmatched point in
/// ascending order. The visitor sees each complete diagram once, by const
/// reference to a buffer that is mutated between calls.
class DiagramEnumerator {
public:
    explicit DiagramEnumerator(unsigned n);

    template <class Visitor>
    void for_each(Visitor&& visit) {
        reset();
        descend(0, visit);
    }

    /// Only the diagrams in which point 0 is joined to `first_partner`. The
    /// 2n-1 branches partition the full stream.
    template <class Visitor>
    void for_each_in_branch(Point first_partner, Visitor&& visit) {
        check_branch(first_partner);
        reset();
        link(0, first_partner);
        descend(1, visit);
    }

private:
    static constexpr Point kUnmatched = static_cast<Point>(-1);

    void reset();
    void check_branch(Point first_partner) const;
    void link(Point a, Point b) {
        buffer_.partner_[a] = b;
        buffer_.partner_[b] = a;
    }
    void unlink(Point a, Point b) {
        buffer_.partner_[a] = kUnmatched;
        buffer_.partner_[b] = kUnmatched;
    }

    template <class Visitor>
    void descend(Point from, Visitor& visit) {
        auto& p = buffer_.partner_;
        const Point size = static_cast<Point>(p.size());
        while (from < size && p[from] != kUnmatched)
            ++from;
        if (from == size) {
            visit(static_cast<const ChordDiagram&>(buffer_));
            return;
        }
        for (Point w = from + 1; w < size; ++w) {
            if (p[w] != kUnmatched)
                continue;
            link(from, w);
            descend(from + 1, visit);
            unlink(from, w);
        }
    }

    ChordDiagram buffer_;
};

// Every diagram of order n in enumeration order. Intended for small n.
std::vector<ChordDiagram> all_diagrams(unsigned n);

} // namespace chorddia
