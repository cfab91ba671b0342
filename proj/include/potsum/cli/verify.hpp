#pragma once

#include <cstdint>
#include <string_view>

#include "potsum/cli/report.hpp"

namespace potsum::cli {

enum class Suite { Potents, Charsums, Bounds, All };

/// Runs every applicable check of `suite` over prime powers q <= qmax and
/// appends the per-q records, failures and published-form discrepancies.
void run_suite(Suite suite, std::uint64_t qmax, RunReport& report);

void run_potents_suite(std::uint64_t qmax, RunReport& report);
void run_charsums_suite(std::uint64_t qmax, RunReport& report);
void run_bounds_suite(std::uint64_t qmax, RunReport& report);

std::string_view to_string(Suite suite) noexcept;

}  // namespace potsum::cli
