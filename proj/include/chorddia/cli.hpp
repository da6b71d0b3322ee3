#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chorddia/arithmetic.hpp"
#include "chorddia/diagram.hpp"

namespace chorddia {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitResource = 3,
};

/// One row of the growth table.
struct CountRecord {
    unsigned n = 0;
    BigCount c_n;
    BigCount floor_c_lower;
    BigCount d_n;
    BigCount floor_d_lower;
};

CountRecord count_record(unsigned n);
std::vector<CountRecord> count_table(unsigned from, unsigned to);

// Header row plus one LF-terminated row per record.
std::string table_csv(std::span<const CountRecord> records);
nlohmann::json table_json(std::span<const CountRecord> records);

// Standalone SVG 1.1 drawing of d; byte-identical for identical input.
std::string render_svg(const ChordDiagram& d);

// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace chorddia
