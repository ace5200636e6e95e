// Config-driven runs of every pipeline and their CSV / JSON artifacts.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spt/config.hpp"

namespace spt {

struct RunResult {
    std::string kind;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string summary;  // JSON object text
};

RunResult run_experiment(const RunConfig& cfg);

// <dir>/<kind>.csv and <dir>/<kind>_summary.json, each written to a temporary file and renamed.
void emit_results(const RunResult& result, const std::string& dir);
std::string to_csv(const RunResult& result);

// Deterministic number formatting shared by every artifact.
std::string format_number(double x);

// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t x);

extern const char* const kVersion;

}  // namespace spt
