#pragma once

#include <cstdint>
#include <optional>

#include "potsum/cli/report.hpp"
#include "potsum/cli/verify.hpp"
#include "potsum/sumset.hpp"

namespace potsum::cli {

const char* version() noexcept;

RunReport cmd_search(std::uint64_t m, std::uint64_t limit, BoundaryRule rule, int jobs);
RunReport cmd_verify(Suite suite, std::uint64_t qmax);
RunReport cmd_field(std::uint64_t q, std::optional<std::uint64_t> show_potents);

}  // namespace potsum::cli
