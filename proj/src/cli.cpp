#include "chorddia/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "chorddia/burnside.hpp"
#include "chorddia/classic_counts.hpp"
#include "chorddia/closed_forms.hpp"
#include "chorddia/errors.hpp"
#include "chorddia/group_algebra.hpp"
#include "chorddia/oracle.hpp"

namespace chorddia {

namespace {

struct GroupChoice {
    std::string kind = "cyclic";
    std::string file;
};

PermGroup load_group_file(const std::string& path, unsigned points)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open group file " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("group file " + path + ": " + e.what());
    }
    try {
        const auto declared = doc.at("points").get<unsigned>();
        if (declared != points)
            throw DomainError(fmt::format("group file {} declares {} points, expected {}", path,
                                          declared, points));
        std::vector<GroupElement> generators;
        for (const auto& row : doc.at("elements")) {
            std::vector<Point> images;
            for (const auto& v : row) {
                const auto one_based = v.get<long long>();
                if (one_based < 1 || one_based > static_cast<long long>(points))
                    throw DomainError(fmt::format("group file {}: image {} outside [1, {}]", path,
                                                  one_based, points));
                images.push_back(static_cast<Point>(one_based - 1));
            }
            if (images.size() != points)
                throw DomainError(fmt::format("group file {}: element has {} images, expected {}",
                                              path, images.size(), points));
            generators.push_back(GroupElement::from_images(std::move(images)));
        }
        return generate_group(generators, points);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("group file " + path + ": " + e.what());
    }
}

PermGroup resolve_group(const GroupChoice& choice, unsigned n)
{
    if (n == 0)
        throw DomainError("n must be at least 1");
    if (!choice.file.empty())
        return load_group_file(choice.file, 2 * n);
    auto kind = parse_standard_group(choice.kind);
    if (!kind)
        throw DomainError("unknown group '" + choice.kind + "'");
    return make_standard_group(*kind, 2 * n);
}

BigCount formula_count(StandardGroup kind, unsigned n)
{
    switch (kind) {
    case StandardGroup::identity: return identity_count(n);
    case StandardGroup::cyclic: return cyclic_count(n);
    case StandardGroup::dihedral: return dihedral_count(n);
    }
    throw DomainError("unknown group");
}

OracleOptions oracle_options(unsigned threads)
{
    auto options = OracleOptions::from_environment();
    options.threads = std::max(threads, 1u);
    return options;
}

// ----------------------------------------------------------------- verify

class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void check(const std::string& name, const std::function<std::optional<std::string>()>& body)
    {
        std::optional<std::string> failure;
        try {
            failure = body();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure) {
            ++failed_;
            out_ << "FAIL " << name << ": " << *failure << '\n';
        } else {
            ++passed_;
            out_ << "ok   " << name << '\n';
        }
    }

    bool all_passed() const { return failed_ == 0; }

    void summary() const
    {
        out_ << passed_ << " passed, " << failed_ << " failed\n";
    }

private:
    std::ostream& out_;
    unsigned passed_ = 0;
    unsigned failed_ = 0;
};

std::optional<std::string> mismatch(const std::string& what, const BigCount& got,
                                    const BigCount& want)
{
    if (got == want)
        return std::nullopt;
    return what + ": " + got.str() + " != " + want.str();
}

int verify(unsigned n_max, unsigned oracle_max, const OracleOptions& options, std::ostream& out)
{
    if (n_max == 0)
        throw DomainError("verify: --n-max must be at least 1");
    Report report(out);
    const StandardGroup kinds[] = {StandardGroup::identity, StandardGroup::cyclic,
                                   StandardGroup::dihedral};

    for (auto kind : kinds) {
        report.check(fmt::format("formula = burnside, {} group, n = 1..{}", to_string(kind), n_max),
                     [&]() -> std::optional<std::string> {
                         for (unsigned n = 1; n <= n_max; ++n) {
                             auto group = make_standard_group(kind, 2 * n);
                             if (auto m = mismatch(fmt::format("n = {}", n),
                                                   burnside_count(n, group), formula_count(kind, n)))
                                 return m;
                         }
                         return std::nullopt;
                     });
    }

    report.check(fmt::format("wreath class counts match psi, n = 1..{}", n_max),
                 [&]() -> std::optional<std::string> {
                     for (unsigned n = 1; n <= n_max; ++n) {
                         const auto dist = wreath_cycle_type_distribution(n);
                         if (auto m = mismatch(fmt::format("n = {} total", n), dist.total(),
                                               power(BigCount(2), n) * factorial(n)))
                             return m;
                         for (auto i : divisors(2 * n)) {
                             CycleType type;
                             type.add(static_cast<unsigned>(i), static_cast<unsigned>(2 * n / i));
                             if (auto m = mismatch(fmt::format("n = {}, i = {}", n, i),
                                                   dist.count_of(type), psi(n, i)))
                                 return m;
                         }
                     }
                     return std::nullopt;
                 });

    const unsigned top = std::min(n_max, oracle_max);
    for (auto kind : kinds) {
        report.check(fmt::format("formula = oracle, {} group, n = 1..{}", to_string(kind), top),
                     [&]() -> std::optional<std::string> {
                         for (unsigned n = 1; n <= top; ++n) {
                             auto group = make_standard_group(kind, 2 * n);
                             const auto summary = orbit_count(n, group, options);
                             if (auto m = mismatch(fmt::format("n = {}", n), summary.orbit_count,
                                                   formula_count(kind, n)))
                                 return m;
                             if (auto m = mismatch(fmt::format("n = {} orbit mass", n),
                                                   summary.total_mass(), identity_count(n)))
                                 return m;
                         }
                         return std::nullopt;
                     });
    }

    report.check(fmt::format("rotation fixed points = nu, n = 1..{}", top),
                 [&]() -> std::optional<std::string> {
                     for (unsigned n = 1; n <= top; ++n) {
                         for (unsigned s = 0; s < 2 * n; ++s) {
                             const auto g = GroupElement::rotation(2 * n, s);
                             const auto order = 2 * n / std::gcd(s, 2 * n);
                             if (auto m = mismatch(fmt::format("n = {}, shift = {}", n, s),
                                                   fixed_diagram_count(n, g, options), nu(n, order)))
                                 return m;
                         }
                     }
                     return std::nullopt;
                 });

    report.check(fmt::format("touchard polynomial = crossing distribution, n = 1..{}", top),
                 [&]() -> std::optional<std::string> {
                     for (unsigned n = 1; n <= top; ++n)
                         if (touchard_polynomial(n) != crossing_distribution(n, options))
                             return fmt::format("n = {}", n);
                     return std::nullopt;
                 });

    report.check(fmt::format("strict recurrence = strict count, n = 1..{}", top),
                 [&]() -> std::optional<std::string> {
                     const auto seq = hk_sequences(top);
                     for (unsigned n = 1; n <= top; ++n)
                         if (auto m = mismatch(fmt::format("n = {}", n), seq.b_of(n),
                                               strict_count(n, options)))
                             return m;
                     return std::nullopt;
                 });

    report.summary();
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

// -------------------------------------------------------------- enumerate

void write_svg_dir(const std::vector<ChordDiagram>& reps, const std::string& dir)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw DomainError("cannot create directory " + dir + ": " + ec.message());
    for (std::size_t k = 0; k < reps.size(); ++k) {
        const auto path = fs::path(dir) / fmt::format("diagram_{:03}.svg", k + 1);
        std::ofstream file(path, std::ios::binary);
        if (!file)
            throw DomainError("cannot write " + path.string());
        file << render_svg(reps[k]);
    }
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counting and enumeration of chord diagrams under circle symmetries",
                 "chorddia"};
    app.require_subcommand(1);

    unsigned n = 0;
    unsigned threads = 1;
    GroupChoice group;
    std::string method;
    std::string format;
    std::string out_dir;
    unsigned from = 3;
    unsigned to = 11;
    unsigned n_max = 0;
    std::optional<unsigned> oracle_max;

    const std::vector<std::string> group_names{"identity", "cyclic", "dihedral"};

    auto* count = app.add_subcommand("count", "Number of diagrams of order n up to a group");
    count->add_option("--n", n, "Order (number of chords)")->required();
    count->add_option("--group", group.kind, "identity | cyclic | dihedral")
        ->check(CLI::IsMember(group_names));
    count->add_option("--group-file", group.file, "JSON group file (overrides --group)");
    count->add_option("--method", method, "formula | burnside | oracle")
        ->check(CLI::IsMember({"formula", "burnside", "oracle"}));
    count->add_option("--threads", threads, "Worker threads for the oracle");

    auto* table = app.add_subcommand("table", "Growth table of c_n and d_n with lower bounds");
    table->add_option("--from", from, "First order");
    table->add_option("--to", to, "Last order");
    table->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* enumerate = app.add_subcommand("enumerate", "One representative per orbit");
    enumerate->add_option("--n", n, "Order")->required();
    enumerate->add_option("--group", group.kind, "identity | cyclic | dihedral")
        ->check(CLI::IsMember(group_names));
    enumerate->add_option("--group-file", group.file, "JSON group file (overrides --group)");
    enumerate->add_option("--format", format, "jsonl | svg-dir")
        ->check(CLI::IsMember({"jsonl", "svg-dir"}));
    enumerate->add_option("--out", out_dir, "Output directory for svg-dir");
    enumerate->add_option("--threads", threads, "Worker threads");

    auto* cross = app.add_subcommand("crossings", "Diagrams of order n by number of crossings");
    cross->add_option("--n", n, "Order")->required();
    cross->add_option("--method", method, "formula | oracle")
        ->check(CLI::IsMember({"formula", "oracle"}));
    cross->add_option("--threads", threads, "Worker threads for the oracle");

    auto* strict = app.add_subcommand("strict", "Strict diagram counts a_2n and b_2n");
    strict->add_option("--n-max", n_max, "Largest order")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check all computation paths");
    verify_cmd->add_option("--n-max", n_max, "Largest order for formula checks")->required();
    verify_cmd->add_option("--oracle-max", oracle_max, "Largest order for exhaustive checks");
    verify_cmd->add_option("--threads", threads, "Worker threads for the oracle");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) {
            const bool custom = !group.file.empty();
            if (method.empty())
                method = custom ? "burnside" : "formula";
            if (method == "formula" && custom)
                throw DomainError("count: --method formula needs a standard --group");
            if (n == 0)
                throw DomainError("count: --n must be at least 1");
            BigCount result;
            if (method == "formula") {
                result = formula_count(*parse_standard_group(group.kind), n);
            } else {
                const auto g = resolve_group(group, n);
                result = method == "burnside" ? burnside_count(n, g)
                                              : orbit_count(n, g, oracle_options(threads)).orbit_count;
            }
            out << result << '\n';
            return kExitOk;
        }
        if (table->parsed()) {
            const auto rows = count_table(from, to);
            if (format == "json")
                out << table_json(rows).dump(2) << '\n';
            else
                out << table_csv(rows);
            return kExitOk;
        }
        if (enumerate->parsed()) {
            const auto g = resolve_group(group, n);
            const auto reps = representatives(n, g, oracle_options(threads));
            if (format == "svg-dir") {
                if (out_dir.empty())
                    throw DomainError("enumerate: --format svg-dir needs --out DIR");
                write_svg_dir(reps, out_dir);
                out << reps.size() << " diagrams written to " << out_dir << '\n';
            } else {
                std::string buffer;
                for (const auto& d : reps)
                    buffer += nlohmann::json(d.chords()).dump() + '\n';
                out << buffer;
            }
            return kExitOk;
        }
        if (cross->parsed()) {
            if (n == 0)
                throw DomainError("crossings: --n must be at least 1");
            const auto poly = method == "oracle" ? crossing_distribution(n, oracle_options(threads))
                                                 : touchard_polynomial(n);
            std::string buffer = "crossings,diagrams\n";
            for (std::size_t j = 0; j < poly.coefficients.size(); ++j)
                buffer += fmt::format("{},{}\n", j, poly.coefficients[j].str());
            out << buffer;
            return kExitOk;
        }
        if (strict->parsed()) {
            const auto seq = hk_sequences(n_max);
            std::string buffer = "n,a_2n,b_2n\n";
            for (unsigned k = 1; k <= n_max; ++k)
                buffer += fmt::format("{},{},{}\n", k, seq.a_of(k).str(), seq.b_of(k).str());
            out << buffer;
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const auto options = oracle_options(threads);
            const unsigned limit = oracle_max.value_or(std::min({n_max, 6u, options.cap}));
            if (std::min(limit, n_max) > std::min(options.cap, kOracleHardCap))
                throw ResourceError(fmt::format("verify: --oracle-max {} exceeds the oracle cap {}",
                                                limit, options.cap));
            return verify(n_max, limit, options, out);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitUsage;
}

} // namespace chorddia
