#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chorddia/arithmetic.hpp"
#include "chorddia/classic_counts.hpp"
#include "chorddia/diagram.hpp"
#include "chorddia/group_algebra.hpp"

namespace chorddia {

inline constexpr unsigned kOracleDefaultCap = 8;
inline constexpr unsigned kOracleHardCap = 9;

struct OracleOptions {
    unsigned cap = kOracleDefaultCap;
    unsigned threads = 1;

    // Default options with the cap taken from CHORDDIA_ORACLE_CAP when set.
    // Throws DomainError if the variable is malformed or above the hard cap.
    static OracleOptions from_environment();
};

struct OrbitSummary {
    unsigned n = 0;
    std::string group;
    BigCount orbit_count;
    std::map<std::uint64_t, BigCount> orbit_size_histogram;

    BigCount total_mass() const;
};

// Exhaustive orbit count over all (2n-1)!! diagrams.
OrbitSummary orbit_count(unsigned n, const PermGroup& group, const OracleOptions& options = {});

// Diagrams D with g.D = D.
BigCount fixed_diagram_count(unsigned n, const GroupElement& g, const OracleOptions& options = {});

// One canonical diagram per orbit, sorted by partner array.
std::vector<ChordDiagram> representatives(unsigned n, const PermGroup& group,
                                          const OracleOptions& options = {});

CrossingPolynomial crossing_distribution(unsigned n, const OracleOptions& options = {});

BigCount strict_count(unsigned n, const OracleOptions& options = {});

} // namespace chorddia
