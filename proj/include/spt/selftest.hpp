// Seeded invariant suite behind the `selftest` subcommand: a reduced instance of every
// check, each with a fingerprint of the numbers it produced.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spt {

struct SelftestRow {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    std::string fingerprint;
};

std::vector<SelftestRow> run_selftest(std::uint64_t seed);
std::string format_selftest(const std::vector<SelftestRow>& rows);

}  // namespace spt
