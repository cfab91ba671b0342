#include "potsum/cli/report.hpp"

#include <fmt/format.h>

#include "potsum/field.hpp"

namespace potsum {

// ADL hooks for nlohmann::json; kept next to the report code since only the
// CLI layer serializes.

void to_json(nlohmann::json& j, const EisensteinInt& x) { j = {{"a", x.a()}, {"b", x.b()}}; }
void from_json(const nlohmann::json& j, EisensteinInt& x) {
  x = EisensteinInt(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>());
}

void to_json(nlohmann::json& j, const Element& e) { j = e.index; }
void from_json(const nlohmann::json& j, Element& e) { e.index = j.get<std::uint32_t>(); }

void to_json(nlohmann::json& j, const SearchHit& h) {
  j = {{"q", h.q}, {"m", h.m}, {"n", h.n}, {"boundary_only", h.boundary_only}};
}
void from_json(const nlohmann::json& j, SearchHit& h) {
  j.at("q").get_to(h.q);
  j.at("m").get_to(h.m);
  j.at("n").get_to(h.n);
  j.at("boundary_only").get_to(h.boundary_only);
}

void to_json(nlohmann::json& j, const QuadraticSums& s) {
  j = {{"q", s.q}, {"lambda_minus1", s.lambda_minus1}, {"S", s.S}, {"T", s.T}, {"U", s.U}, {"V", s.V}};
}
void from_json(const nlohmann::json& j, QuadraticSums& s) {
  j.at("q").get_to(s.q);
  j.at("lambda_minus1").get_to(s.lambda_minus1);
  j.at("S").get_to(s.S);
  j.at("T").get_to(s.T);
  j.at("U").get_to(s.U);
  j.at("V").get_to(s.V);
}

}  // namespace potsum

namespace boost {

void to_json(nlohmann::json& j, const rational<std::int64_t>& r) {
  j = {{"num", r.numerator()}, {"den", r.denominator()}};
}
void from_json(const nlohmann::json& j, rational<std::int64_t>& r) {
  r.assign(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

}  // namespace boost

namespace potsum {

void to_json(nlohmann::json& j, const NqValues& v) {
  j = {{"direct", v.direct},
       {"via_neq", v.via_neq},
       {"via_stterms", v.via_stterms},
       {"printed_stterms", v.printed_stterms}};
}
void from_json(const nlohmann::json& j, NqValues& v) {
  j.at("direct").get_to(v.direct);
  j.at("via_neq").get_to(v.via_neq);
  j.at("via_stterms").get_to(v.via_stterms);
  j.at("printed_stterms").get_to(v.printed_stterms);
}

void to_json(nlohmann::json& j, const MqValues& v) {
  j = {{"direct", v.direct},
       {"meq_numerator", v.meq_numerator},
       {"group_sizes", v.group_sizes},
       {"group_sums", v.group_sums}};
  const auto via = v.via_meq();
  j["via_meq"] = via ? nlohmann::json(*via) : nlohmann::json(nullptr);
}
void from_json(const nlohmann::json& j, MqValues& v) {
  j.at("direct").get_to(v.direct);
  j.at("meq_numerator").get_to(v.meq_numerator);
  j.at("group_sizes").get_to(v.group_sizes);
  j.at("group_sums").get_to(v.group_sums);
}

void to_json(nlohmann::json& j, const CharSumReport& r) {
  j = {{"q", r.q}, {"mq", r.mq}};
  j["quadratic"] = r.quadratic ? nlohmann::json(*r.quadratic) : nlohmann::json(nullptr);
  j["nq"] = r.nq ? nlohmann::json(*r.nq) : nlohmann::json(nullptr);
  j["jacobi"] = r.jacobi ? nlohmann::json::array({r.jacobi->first, r.jacobi->second})
                         : nlohmann::json(nullptr);
}
void from_json(const nlohmann::json& j, CharSumReport& r) {
  j.at("q").get_to(r.q);
  j.at("mq").get_to(r.mq);
  if (!j.at("quadratic").is_null()) r.quadratic = j.at("quadratic").get<QuadraticSums>();
  if (!j.at("nq").is_null()) r.nq = j.at("nq").get<NqValues>();
  if (!j.at("jacobi").is_null())
    r.jacobi = std::pair{j.at("jacobi").at(0).get<EisensteinInt>(),
                         j.at("jacobi").at(1).get<EisensteinInt>()};
}

namespace cli {

void to_json(nlohmann::json& j, const CheckRecord& c) {
  j = {{"name", c.name}, {"q", c.q}, {"passed", c.passed}};
}
void from_json(const nlohmann::json& j, CheckRecord& c) {
  j.at("name").get_to(c.name);
  j.at("q").get_to(c.q);
  j.at("passed").get_to(c.passed);
}

void to_json(nlohmann::json& j, const CheckFailure& f) {
  j = {{"check", f.check}, {"q", f.q}, {"expected", f.expected}, {"actual", f.actual}};
}
void from_json(const nlohmann::json& j, CheckFailure& f) {
  j.at("check").get_to(f.check);
  j.at("q").get_to(f.q);
  j.at("expected").get_to(f.expected);
  j.at("actual").get_to(f.actual);
}

void to_json(nlohmann::json& j, const FieldInfo& f) {
  j = {{"p", f.spec.p},
       {"v", f.spec.v},
       {"q", f.spec.q},
       {"modulus", f.spec.modulus},
       {"modulus_text", format_polynomial(f.spec.modulus)},
       {"generator", f.generator},
       {"log_tables", f.has_log_tables}};
  if (f.cube_roots)
    j["cube_roots"] = {{"z", f.cube_roots->z}, {"y", f.cube_roots->y}};
  else
    j["cube_roots"] = nullptr;
  if (f.potent_exponent)
    j["potents"] = {{"n", *f.potent_exponent}, {"members", f.potents}};
  else
    j["potents"] = nullptr;
}
void from_json(const nlohmann::json& j, FieldInfo& f) {
  j.at("p").get_to(f.spec.p);
  j.at("v").get_to(f.spec.v);
  j.at("q").get_to(f.spec.q);
  j.at("modulus").get_to(f.spec.modulus);
  j.at("generator").get_to(f.generator);
  j.at("log_tables").get_to(f.has_log_tables);
  if (!j.at("cube_roots").is_null()) {
    CubeRoots r{Element{1}, j["cube_roots"].at("z").get<Element>(),
                j["cube_roots"].at("y").get<Element>()};
    f.cube_roots = r;
  }
  if (!j.at("potents").is_null()) {
    f.potent_exponent = j["potents"].at("n").get<std::uint64_t>();
    j["potents"].at("members").get_to(f.potents);
  }
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["hits"] = r.hits;
  j["charsum_reports"] = r.charsum_reports;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["errata"] = r.errata;
  j["field"] = r.field ? nlohmann::json(*r.field) : nlohmann::json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  j["version"] = r.version;
  return j;
}

RunReport report_from_json(const nlohmann::json& j) {
  RunReport r;
  j.at("command").get_to(r.command);
  j.at("parameters").get_to(r.parameters);
  j.at("hits").get_to(r.hits);
  j.at("charsum_reports").get_to(r.charsum_reports);
  j.at("checks").get_to(r.checks);
  j.at("failures").get_to(r.failures);
  j.at("errata").get_to(r.errata);
  if (!j.at("field").is_null()) r.field = j.at("field").get<FieldInfo>();
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  j.at("version").get_to(r.version);
  return r;
}

std::string hit_lines(const std::vector<SearchHit>& hits) {
  std::string out;
  for (const auto& h : hits)
    out += fmt::format("{} {} {}{}\n", h.q, h.m, h.n, h.boundary_only ? " boundary-only" : "");
  return out;
}

namespace {

std::string format_set(const std::vector<Element>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i)
    out += fmt::format("{}{}", i ? ", " : "", members[i].index);
  return out + "}";
}

std::string timing_line(std::int64_t ms) {
  return fmt::format("done in {:.1f}s\n", static_cast<double>(ms) / 1000.0);
}

std::string field_text(const FieldInfo& f) {
  std::string out = fmt::format("field GF({}) = GF({}^{})\n", f.spec.q, f.spec.p, f.spec.v);
  out += fmt::format("modulus {}\n", format_polynomial(f.spec.modulus));
  out += fmt::format("generator {}\n", f.generator.index);
  if (f.cube_roots)
    out += fmt::format("cube roots of unity: z={} y={}\n", f.cube_roots->z.index, f.cube_roots->y.index);
  else
    out += "cube roots of unity: none (3 does not divide q-1)\n";
  if (f.potent_exponent)
    out += fmt::format("C_{} = {}\n", *f.potent_exponent, format_set(f.potents));
  return out;
}

}  // namespace

std::string render_text(const RunReport& r) {
  std::string out;
  if (r.command == "search") {
    out = hit_lines(r.hits);
  } else if (r.command == "field") {
    if (r.field) out = field_text(*r.field);
    return out;
  } else {
    for (const auto& c : r.checks)
      out += fmt::format("{:>6} {:<24} {}\n", c.q, c.name, c.passed ? "pass" : "FAIL");
    for (const auto& f : r.failures)
      out += fmt::format("failure: {} q={} expected {} got {}\n", f.check, f.q, f.expected, f.actual);
    for (const auto& e : r.errata)
      out += fmt::format("erratum: {} q={} published {} actual {}\n", e.check, e.q, e.expected, e.actual);
    out += fmt::format("{} checks, {} failures, {} errata\n", r.checks.size(), r.failures.size(),
                       r.errata.size());
  }
  return out + timing_line(r.elapsed_ms);
}

std::string render_json(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

std::string render_csv(const RunReport& r) {
  std::string out;
  if (r.command == "search") {
    out = "q,m,n,boundary_only\n";
    for (const auto& h : r.hits)
      out += fmt::format("{},{},{},{}\n", h.q, h.m, h.n, h.boundary_only ? 1 : 0);
  } else if (r.command == "field") {
    out = "key,value\n";
    if (r.field) {
      const auto& f = *r.field;
      out += fmt::format("q,{}\np,{}\nv,{}\nmodulus,{}\ngenerator,{}\n", f.spec.q, f.spec.p, f.spec.v,
                         format_polynomial(f.spec.modulus), f.generator.index);
      if (f.cube_roots) out += fmt::format("z,{}\ny,{}\n", f.cube_roots->z.index, f.cube_roots->y.index);
      for (auto a : f.potents) out += fmt::format("potent,{}\n", a.index);
    }
  } else {
    out = "check,q,passed\n";
    for (const auto& c : r.checks) out += fmt::format("{},{},{}\n", c.name, c.q, c.passed ? 1 : 0);
  }
  return out;
}

std::string render(const RunReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return render_json(r);
    case OutputFormat::Csv: return render_csv(r);
    case OutputFormat::Text: break;
  }
  return render_text(r);
}

}  // namespace cli
}  // namespace potsum
