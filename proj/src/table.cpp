#include "chorddia/closed_forms.hpp"
#include "chorddia/cli.hpp"
#include "chorddia/errors.hpp"

namespace chorddia {

CountRecord count_record(unsigned n)
{
    return CountRecord{
        n,
        cyclic_count(n),
        asymptotic_lower(SymmetryKind::cyclic, n).exact_floor,
        dihedral_count(n),
        asymptotic_lower(SymmetryKind::dihedral, n).exact_floor,
    };
}

std::vector<CountRecord> count_table(unsigned from, unsigned to)
{
    if (from == 0 || from > to)
        throw DomainError("count_table: need 1 <= from <= to");
    std::vector<CountRecord> rows;
    for (unsigned n = from; n <= to; ++n)
        rows.push_back(count_record(n));
    return rows;
}

std::string table_csv(std::span<const CountRecord> records)
{
    std::string out = "n,c_n,floor_c_lower,d_n,floor_d_lower\n";
    for (const auto& r : records) {
        out += std::to_string(r.n);
        for (const BigCount* v : {&r.c_n, &r.floor_c_lower, &r.d_n, &r.floor_d_lower}) {
            out += ',';
            out += v->str();
        }
        out += '\n';
    }
    return out;
}

nlohmann::json table_json(std::span<const CountRecord> records)
{
    auto rows = nlohmann::json::array();
    for (const auto& r : records)
        rows.push_back({
            {"n", r.n},
            {"c_n", r.c_n.str()},
            {"floor_c_lower", r.floor_c_lower.str()},
            {"d_n", r.d_n.str()},
            {"floor_d_lower", r.floor_d_lower.str()},
        });
    return rows;
}

} // namespace chorddia
