#include "chorddia/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "chorddia/errors.hpp"

namespace chorddia {

OracleOptions OracleOptions::from_environment()
{
    OracleOptions options;
    if (const char* raw = std::getenv("CHORDDIA_ORACLE_CAP"); raw != nullptr && *raw != '\0') {
        char* end = nullptr;
        unsigned long cap = std::strtoul(raw, &end, 10);
        if (*end != '\0' || cap == 0)
            throw DomainError(std::string("CHORDDIA_ORACLE_CAP: not a positive integer: ") + raw);
        if (cap > kOracleHardCap)
            throw DomainError("CHORDDIA_ORACLE_CAP: " + std::to_string(cap) +
                              " exceeds the hard cap " + std::to_string(kOracleHardCap));
        options.cap = static_cast<unsigned>(cap);
    }
    return options;
}

BigCount OrbitSummary::total_mass() const
{
    BigCount sum = 0;
    for (const auto& [size, count] : orbit_size_histogram)
        sum += size * count;
    return sum;
}

namespace {

void check_cap(unsigned n, const OracleOptions& options, const char* who)
{
    if (n == 0)
        throw DomainError(std::string(who) + ": n must be positive");
    const unsigned cap = std::min(options.cap, kOracleHardCap);
    if (n > cap)
        throw ResourceError(std::string(who) + ": n = " + std::to_string(n) +
                            " exceeds the oracle cap " + std::to_string(cap));
}

void check_points(unsigned n, unsigned points, const char* who)
{
    if (points != 2 * n)
        throw DomainError(std::string(who) + ": group acts on " + std::to_string(points) +
                          " points, expected " + std::to_string(2 * n));
}

/// Runs `work(branch, enumerator)` for every partner of point 0 (the 2n-1
/// branches) on up to options.threads workers and returns the per-branch
/// results in branch order, so merging is deterministic.
template <class Result, class Work>
std::vector<Result> run_branches(unsigned n, const OracleOptions& options, Work work)
{
    const unsigned branches = 2 * n - 1;
    std::vector<Result> results(branches);
    const unsigned workers = std::clamp(options.threads, 1u, branches);

    auto drain = [&](std::atomic<unsigned>& next) {
        DiagramEnumerator enumerator(n);
        for (unsigned b = next++; b < branches; b = next++)
            results[b] = work(static_cast<Point>(b + 1), enumerator);
    };

    std::atomic<unsigned> next{0};
    if (workers == 1) {
        drain(next);
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] { drain(next); });
    pool.clear();
    return results;
}

struct OrbitPartial {
    std::uint64_t orbits = 0;
    std::map<std::uint64_t, std::uint64_t> sizes;
    std::vector<ChordDiagram> representatives;
};

OrbitPartial scan_orbits(unsigned n, const PermGroup& group, const OracleOptions& options,
                         bool keep_representatives)
{
    auto partials = run_branches<OrbitPartial>(
        n, options, [&](Point branch, DiagramEnumerator& enumerator) {
            OrbitPartial part;
            std::vector<Point> scratch;
            enumerator.for_each_in_branch(branch, [&](const ChordDiagram& d) {
                const auto probe = probe_orbit(d.partners(), group, scratch);
                if (!probe.canonical)
                    return;
                ++part.orbits;
                ++part.sizes[group.order() / probe.stabilizer];
                if (keep_representatives)
                    part.representatives.push_back(d);
            });
            return part;
        });

    OrbitPartial merged;
    for (auto& part : partials) {
        merged.orbits += part.orbits;
        for (auto [size, count] : part.sizes)
            merged.sizes[size] += count;
        std::move(part.representatives.begin(), part.representatives.end(),
                  std::back_inserter(merged.representatives));
    }
    return merged;
}

} // namespace

OrbitSummary orbit_count(unsigned n, const PermGroup& group, const OracleOptions& options)
{
    check_cap(n, options, "orbit_count");
    check_points(n, group.points(), "orbit_count");
    const auto scan = scan_orbits(n, group, options, false);
    OrbitSummary summary{n, group.name(), scan.orbits, {}};
    for (auto [size, count] : scan.sizes)
        summary.orbit_size_histogram[size] = count;
    return summary;
}

BigCount fixed_diagram_count(unsigned n, const GroupElement& g, const OracleOptions& options)
{
    check_cap(n, options, "fixed_diagram_count");
    check_points(n, g.size(), "fixed_diagram_count");
    const auto img = g.images();
    auto partials = run_branches<std::uint64_t>(
        n, options, [&](Point branch, DiagramEnumerator& enumerator) {
            std::uint64_t fixed = 0;
            enumerator.for_each_in_branch(branch, [&](const ChordDiagram& d) {
                const auto p = d.partners();
                bool ok = true;
                for (std::size_t v = 0; v < p.size() && ok; ++v)
                    ok = p[img[v]] == img[p[v]];
                fixed += ok;
            });
            return fixed;
        });
    BigCount total = 0;
    for (auto f : partials)
        total += f;
    return total;
}

std::vector<ChordDiagram> representatives(unsigned n, const PermGroup& group,
                                          const OracleOptions& options)
{
    check_cap(n, options, "representatives");
    check_points(n, group.points(), "representatives");
    auto reps = scan_orbits(n, group, options, true).representatives;
    std::sort(reps.begin(), reps.end());
    return reps;
}

CrossingPolynomial crossing_distribution(unsigned n, const OracleOptions& options)
{
    check_cap(n, options, "crossing_distribution");
    const std::size_t length = static_cast<std::size_t>(n) * (n - 1) / 2 + 1;
    auto partials = run_branches<std::vector<std::uint64_t>>(
        n, options, [&](Point branch, DiagramEnumerator& enumerator) {
            std::vector<std::uint64_t> hist(length, 0);
            enumerator.for_each_in_branch(branch,
                                          [&](const ChordDiagram& d) { ++hist[crossings(d)]; });
            return hist;
        });
    CrossingPolynomial poly{n, std::vector<BigCount>(length, 0)};
    for (const auto& hist : partials)
        for (std::size_t j = 0; j < length; ++j)
            poly.coefficients[j] += hist[j];
    return poly;
}

BigCount strict_count(unsigned n, const OracleOptions& options)
{
    check_cap(n, options, "strict_count");
    auto partials = run_branches<std::uint64_t>(
        n, options, [&](Point branch, DiagramEnumerator& enumerator) {
            std::uint64_t strict = 0;
            enumerator.for_each_in_branch(branch,
                                          [&](const ChordDiagram& d) { strict += is_strict(d); });
            return strict;
        });
    BigCount total = 0;
    for (auto s : partials)
        total += s;
    return total;
}

} // namespace chorddia
