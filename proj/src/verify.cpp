#include "potsum/cli/verify.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>

#include "potsum/characters.hpp"
#include "potsum/charsums.hpp"
#include "potsum/numtheory.hpp"
#include "potsum/potents.hpp"
#include "potsum/weil.hpp"

namespace potsum::cli {

namespace {

class Recorder {
 public:
  explicit Recorder(RunReport& report) : report_(report) {}

  bool check(const std::string& name, std::uint64_t q, bool ok, const std::string& expected = "",
             const std::string& actual = "") {
    report_.checks.push_back({name, q, ok});
    if (!ok) report_.failures.push_back({name, q, expected, actual});
    return ok;
  }

  void erratum(const std::string& name, std::uint64_t q, const std::string& published,
               const std::string& actual) {
    report_.errata.push_back({name, q, published, actual});
  }

 private:
  RunReport& report_;
};

std::string str(const Rational& r) {
  return r.denominator() == 1 ? fmt::format("{}", r.numerator())
                              : fmt::format("{}/{}", r.numerator(), r.denominator());
}

std::string str(const EisensteinInt& x) { return fmt::format("{}{:+}w", x.a(), x.b()); }

bool sets_equal(const PotentSet& a, const PotentSet& b) { return a.members == b.members; }

// |t| <= max(3, sqrt(q) + 2)
bool t_magnitude_ok(std::int64_t t, std::uint64_t q) {
  const std::int64_t m = std::llabs(t);
  return m <= 3 || (m - 2) * (m - 2) <= static_cast<std::int64_t>(q);
}

void potents_for(const Field& field, Recorder& rec) {
  const std::uint64_t q = field.order();
  std::string bad_closed, bad_reduce, bad_card;
  for (std::uint64_t n = 2; n <= 2 * q; ++n) {
    const PotentSet closed = n_potents(field, n);
    const PotentSet brute = n_potents_by_definition(field, n);
    if (bad_closed.empty() && !sets_equal(closed, brute)) bad_closed = std::to_string(n);
    if (bad_reduce.empty() && !sets_equal(n_potents(field, reduce_exponent(q, n)), brute))
      bad_reduce = std::to_string(n);
    if (bad_card.empty() && potent_cardinality(q, n) != brute.size()) bad_card = std::to_string(n);
  }
  rec.check("potents-closed-form", q, bad_closed.empty(), "equal sets", "differs at n=" + bad_closed);
  rec.check("reduce-exponent", q, bad_reduce.empty(), "equal sets", "differs at n=" + bad_reduce);
  rec.check("potent-cardinality", q, bad_card.empty(), "gcd(n-1,q-1)+1", "differs at n=" + bad_card);

  std::vector<Element> c4{field.zero(), field.one()};
  if (const auto roots = field.cube_roots_of_unity()) {
    c4.push_back(roots->z);
    c4.push_back(roots->y);
    std::sort(c4.begin(), c4.end());
  }
  rec.check("C4-structure", q, n_potents(field, 4).members == c4);
}

void charsums_for(const Field& field, Recorder& rec, RunReport& report) {
  const std::uint64_t q = field.order();
  const bool odd = field.characteristic() != 2;
  const auto qi = static_cast<std::int64_t>(q);

  if (odd) {
    const auto c = consecutive_nonsquare_pairs(field);
    rec.check("consecutive-nonsquares", q, c.holds(), std::to_string(c.formula),
              std::to_string(c.direct));
  }
  const auto roots = field.cube_roots_of_unity();
  if (!roots) return;

  CharSumReport summary;
  summary.q = q;
  if (odd) {
    rec.check("lambda(z)", q, quadratic_character(field, roots->z) == 1, "1", "-1");
    rec.check("lambda(-3)", q, quadratic_character(field, field.from_integer(-3)) == 1, "1", "-1");

    const QuadraticSums sums = quadratic_sums(field);
    const NqValues nq = compute_Nq(field, sums);
    rec.check("Neq", q, equals(nq.via_neq, nq.direct), std::to_string(nq.direct), str(nq.via_neq));
    rec.check("STterms", q, equals(nq.via_stterms, nq.direct), std::to_string(nq.direct),
              str(nq.via_stterms));
    if (!equals(nq.printed_stterms, nq.direct))
      rec.erratum("STterms-published", q, str(nq.printed_stterms), std::to_string(nq.direct));

    const ClosedFormCheck forms = closed_form_ST_check(field);
    std::string bad;
    for (const auto& t : forms.terms) {
      if (t.direct != t.derived) bad += t.name + " ";
      if (t.direct != t.printed)
        rec.erratum("closed-form-" + t.name, q, std::to_string(t.printed), std::to_string(t.direct));
    }
    rec.check("ST-closed-forms", q, forms.derived_holds(), "all terms", "mismatch " + bad);

    bool magnitude = true;
    for (auto s : sums.S) magnitude = magnitude && std::llabs(s) <= 3;
    for (auto t : sums.T) magnitude = magnitude && t_magnitude_ok(t, q);
    rec.check("ST-magnitude", q, magnitude);
    if (!rec.check("V-bound", q, sums.V * sums.V <= 9 * qi, "|V| <= 3 sqrt(q)", std::to_string(sums.V)))
      rec.check("V-lower-bound", q, sums.V >= 0, "V >= -3 sqrt(q)", std::to_string(sums.V));

    const U4JacobiCheck u4 = u4_jacobi_identity(field);
    rec.check("Jacobi-norm", q, u4.norms_hold(), std::to_string(q),
              fmt::format("{} {}", u4.j_eta.norm(), u4.j_eta2.norm()));
    rec.check("U4-Jacobi", q, u4.identity_holds(), std::to_string(u4.u4), str(u4.combination));
    rec.check("U4-bound", q, u4.bound_holds(), "|U4| <= 1 + 2 sqrt(q)", std::to_string(u4.u4));
    if (!u4.printed_identity_holds())
      rec.erratum("U4-Jacobi-published", q, str(u4.combination) + " / 3", std::to_string(u4.u4));
    if (!u4.printed_bound_holds())
      rec.erratum("U4-bound-published", q, "(3|U4|-1)^2 <= 4q", std::to_string(u4.u4));

    const auto uncovered = static_cast<std::int64_t>(uncovered_count(field, (q + 1) / 2));
    rec.check("Nq-uncovered", q, uncovered == nq.direct, std::to_string(nq.direct),
              std::to_string(uncovered));

    summary.quadratic = sums;
    summary.nq = nq;
    summary.jacobi = std::pair{u4.j_eta, u4.j_eta2};
  }

  const MqValues mq = compute_Mq(field);
  rec.check("Meq", q, mq.consistent(), std::to_string(mq.direct), str(mq.meq_numerator) + " / 81");
  rec.check("Meq-groups", q, mq.group_sizes == std::array<int, 5>{1, 8, 24, 32, 16});
  summary.mq = mq;

  const MixedTCheck mixed = mixed_T_cancellation_check(field);
  rec.check("mixed-T", q, mixed.holds(), str(mixed.displayed_closed_form), str(mixed.displayed_sum));

  const PowerResidues residues = power_residues(field);
  bool nu_ok = true;
  for (std::uint32_t i = 1; i < q && nu_ok; ++i)
    nu_ok = nu(field, Element{i}) == (residues.cubes.test(i) ? 0 : 1);
  rec.check("nu", q, nu_ok);

  const auto m_uncovered = static_cast<std::int64_t>(uncovered_count(field, (q + 2) / 3));
  rec.check("Mq-uncovered", q, m_uncovered == mq.direct, std::to_string(mq.direct),
            std::to_string(m_uncovered));

  if (q % 12 == 1) {
    const UnionDeficiency u = union_deficiency_check(field);
    rec.check("union-deficiency", q, u.holds(), fmt::format("<= {}", q - 1),
              std::to_string(u.union_size));
  }
  report.charsum_reports.push_back(std::move(summary));
}

void bounds_for(const Field& field, Recorder& rec) {
  const std::uint64_t q = field.order();
  const bool n_pos = lower_bound_Nq(q).positive();
  rec.check("threshold-Nq", q, n_pos == (q >= 125), q >= 125 ? "positive" : "not positive",
            n_pos ? "positive" : "not positive");
  const bool m_pos = lower_bound_Mq(q).positive();
  rec.check("threshold-Mq", q, m_pos == (q >= 262), q >= 262 ? "positive" : "not positive",
            m_pos ? "positive" : "not positive");

  if ((q - 1) % 3 == 0) {
    if (q > 124 && field.characteristic() != 2) {
      const NqValues nq = compute_Nq(field);
      rec.check("Nq-positive", q, nq.direct > 0, "> 0", std::to_string(nq.direct));
    }
    if (q > 261) {
      const MqValues mq = compute_Mq(field);
      rec.check("Mq-positive", q, mq.direct > 0, "> 0", std::to_string(mq.direct));
    }
  }

  const auto weil = [&](int d, int degree) {
    const WeilSweep s = weil_exhaustive(field, d, degree);
    rec.check(d == 2 ? "Weil-quadratic" : "Weil-cubic", q, s.violations == 0, "0 violations",
              fmt::format("{} of {}", s.violations, s.checked));
  };
  if (q == 5 || q == 7 || q == 9 || q == 11 || q == 13 || q == 25) weil(2, 4);
  if (q == 7 || q == 13 || q == 25) weil(3, 3);
}

template <class Body>
void for_each_field(std::uint64_t qmax, const Body& body) {
  for (auto q : prime_powers_up_to(qmax)) body(Field::of_order(q));
}

}  // namespace

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::Potents: return "potents";
    case Suite::Charsums: return "charsums";
    case Suite::Bounds: return "bounds";
    case Suite::All: return "all";
  }
  return "?";
}

void run_potents_suite(std::uint64_t qmax, RunReport& report) {
  Recorder rec(report);
  for_each_field(qmax, [&](const Field& f) { potents_for(f, rec); });
}

void run_charsums_suite(std::uint64_t qmax, RunReport& report) {
  Recorder rec(report);
  for_each_field(qmax, [&](const Field& f) { charsums_for(f, rec, report); });
}

void run_bounds_suite(std::uint64_t qmax, RunReport& report) {
  Recorder rec(report);
  for_each_field(qmax, [&](const Field& f) { bounds_for(f, rec); });
}

void run_suite(Suite suite, std::uint64_t qmax, RunReport& report) {
  if (suite == Suite::Potents || suite == Suite::All) run_potents_suite(qmax, report);
  if (suite == Suite::Charsums || suite == Suite::All) run_charsums_suite(qmax, report);
  if (suite == Suite::Bounds || suite == Suite::All) run_bounds_suite(qmax, report);
}

}  // namespace potsum::cli
