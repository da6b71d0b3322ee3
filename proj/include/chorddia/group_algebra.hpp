#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chorddia/arithmetic.hpp"

namespace chorddia {

// A point on the circle, 0-based: [0, 2n).
using Point = std::uint32_t;

BigCount euler_phi(std::uint64_t m);

// Ascending divisors of m.
std::vector<std::uint64_t> divisors(std::uint64_t m);

/// Multiset of cycle lengths, e.g. 1^2 2^3. Keys are lengths, values are
/// multiplicities; neither is ever zero.
class CycleType {
public:
    CycleType() = default;

    static CycleType from_parts(std::span<const unsigned> parts);

    void add(unsigned length, unsigned multiplicity = 1);

    unsigned multiplicity(unsigned length) const;
    unsigned degree() const { return degree_; }
    bool empty() const { return parts_.empty(); }
    const std::map<unsigned, unsigned>& parts() const { return parts_; }

    // "1^2 2^1"; empty type prints as "()".
    std::string to_string() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType& a, const CycleType& b) { return a.parts_ <=> b.parts_; }

private:
    std::map<unsigned, unsigned> parts_;
    unsigned degree_ = 0;
};

/// Integer partitions of n, visited in descending-lexicographic order of the
/// (descending) part list: 4, 3+1, 2+2, 2+1+1, 1+1+1+1.
class IntegerPartitions {
public:
    class iterator {
    public:
        using value_type = std::vector<unsigned>;
        using difference_type = std::ptrdiff_t;
        using reference = const value_type&;
        using pointer = const value_type*;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        explicit iterator(unsigned n);

        reference operator*() const { return parts_; }
        pointer operator->() const { return &parts_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        std::vector<unsigned> parts_;
        bool done_ = true;
    };

    explicit IntegerPartitions(unsigned n) : n_(n) {}
    iterator begin() const { return iterator(n_); }
    iterator end() const { return {}; }

private:
    unsigned n_;
};

// Materialized partitions of n as cycle types, in IntegerPartitions order.
std::vector<CycleType> partitions(unsigned n);

/// A permutation of the 2n circle points, stored as its image array.
/// Rotations and reflections additionally remember their rigid form.
class GroupElement {
public:
    struct RigidForm {
        unsigned shift;
        bool reflected;
        friend bool operator==(const RigidForm&, const RigidForm&) = default;
    };

    static GroupElement identity(unsigned points);
    // v -> (v + shift) mod points
    static GroupElement rotation(unsigned points, unsigned shift);
    // v -> (shift - v) mod points
    static GroupElement reflection(unsigned points, unsigned shift);
    // Throws DomainError unless images is a bijection on [0, images.size()).
    static GroupElement from_images(std::vector<Point> images);

    unsigned size() const { return static_cast<unsigned>(images_.size()); }
    Point operator()(Point v) const { return images_[v]; }
    std::span<const Point> images() const { return images_; }
    const std::optional<RigidForm>& rigid_form() const { return rigid_; }
    bool is_identity() const;

    GroupElement inverse() const;

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.images_ == b.images_; }
    friend auto operator<=>(const GroupElement& a, const GroupElement& b) { return a.images_ <=> b.images_; }

private:
    explicit GroupElement(std::vector<Point> images) : images_(std::move(images)) {}

    std::vector<Point> images_;
    std::optional<RigidForm> rigid_;

    friend GroupElement compose(const GroupElement& outer, const GroupElement& inner);
};

// outer ∘ inner: v -> outer(inner(v)). Throws DomainError on size mismatch.
GroupElement compose(const GroupElement& outer, const GroupElement& inner);

CycleType cycle_type_of(const GroupElement& g);

enum class StandardGroup { identity, cyclic, dihedral };

std::string to_string(StandardGroup kind);
std::optional<StandardGroup> parse_standard_group(std::string_view name);

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// A finite permutation group on the circle points, held as an explicit
/// list of distinct elements sorted by image array.
class PermGroup {
public:
    unsigned points() const { return points_; }
    std::size_t order() const { return elements_.size(); }
    std::span<const GroupElement> elements() const { return elements_; }
    const std::string& name() const { return name_; }
    bool contains(const GroupElement& g) const;

    // Cycle-type classes of the elements with their sizes.
    std::map<CycleType, BigCount> cycle_type_classes() const;

    friend bool operator==(const PermGroup& a, const PermGroup& b) { return a.elements_ == b.elements_; }

private:
    PermGroup(unsigned points, std::vector<GroupElement> elements, std::string name);

    unsigned points_;
    std::vector<GroupElement> elements_;
    std::string name_;

    friend PermGroup make_standard_group(StandardGroup kind, unsigned points);
    friend PermGroup generate_group(std::span<const GroupElement> generators, unsigned points,
                                    std::size_t cap);
};

// Throws DomainError for odd or zero points. On 2 points every reflection
// coincides with a rotation, so the dihedral group there has order 2.
PermGroup make_standard_group(StandardGroup kind, unsigned points);

// Closure of the generators under composition. Throws DomainError on size
// mismatch and ResourceError once the closure exceeds cap elements.
PermGroup generate_group(std::span<const GroupElement> generators, unsigned points,
                         std::size_t cap = kDefaultClosureCap);

} // namespace chorddia
