#include "potsum/cli/commands.hpp"

#include <chrono>

#include "potsum/potents.hpp"

#ifndef POTSUM_VERSION
#define POTSUM_VERSION "0.0.0"
#endif

namespace potsum::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

RunReport make_report(std::string command) {
  RunReport r;
  r.command = std::move(command);
  r.version = version();
  return r;
}

}  // namespace

const char* version() noexcept { return POTSUM_VERSION; }

RunReport cmd_search(std::uint64_t m, std::uint64_t limit, BoundaryRule rule, int jobs) {
  const auto start = Clock::now();
  RunReport r = make_report("search");
  r.parameters = {{"m", std::to_string(m)},
                  {"limit", std::to_string(limit)},
                  {"boundary", rule == BoundaryRule::AppendixExact ? "appendix" : "theorem"}};
  SearchConfig config{m, limit, rule, jobs};
  r.hits = check_all(config);
  r.elapsed_ms = elapsed_ms(start);
  return r;
}

RunReport cmd_verify(Suite suite, std::uint64_t qmax) {
  const auto start = Clock::now();
  RunReport r = make_report("verify");
  r.parameters = {{"suite", std::string(to_string(suite))}, {"qmax", std::to_string(qmax)}};
  run_suite(suite, qmax, r);
  r.elapsed_ms = elapsed_ms(start);
  return r;
}

RunReport cmd_field(std::uint64_t q, std::optional<std::uint64_t> show_potents) {
  const auto start = Clock::now();
  RunReport r = make_report("field");
  r.parameters = {{"q", std::to_string(q)}};
  const Field field = Field::of_order(q);
  FieldInfo info;
  info.spec = field.spec();
  info.generator = field.generator();
  info.has_log_tables = field.has_log_tables();
  info.cube_roots = field.cube_roots_of_unity();
  if (show_potents) {
    r.parameters["show_potents"] = std::to_string(*show_potents);
    info.potent_exponent = show_potents;
    info.potents = n_potents(field, *show_potents).members;
  }
  r.field = std::move(info);
  r.elapsed_ms = elapsed_ms(start);
  return r;
}

}  // namespace potsum::cli
