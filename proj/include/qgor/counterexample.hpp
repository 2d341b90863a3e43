#pragma once

// The counterexample: a ring R = A/a with a nonzerodivisor y such that R/yR
// is quasi-Gorenstein while R is not. Also ships the quotient S = R/yR.

#include "qgor/linkage.hpp"
#include "qgor/parse.hpp"
#include "qgor/report.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgor {

/// Verbatim copy of data/counterexample.ideal.
inline constexpr std::string_view kCounterexampleIdeals = R"IDEAL(# Counterexample data: R = A/a with A = k[Z1..Z9,Y], Y of degree 0.
# a: 2x2 minors of the generic 3x3 matrix in Z1..Z9, with two minors
# deformed by Y, plus nineteen cubic monomials.
# c: a complete intersection inside a of the same codimension.
field Q;
vars Z1..Z9, Y;
weights 1,1,1,1,1,1,1,1,1,0;

ideal a =
  Z6*Z7-Z4*Z9, Z5*Z7-Z4*Z8, Z3*Z7-Z1*Z9, Z2*Z7-Z1*Z8, Z3*Z5-Z2*Z6,
  Z3*Z4-Z1*Z6, Z2*Z4-Z1*Z5, Z4*Z7*Y-Z6*Z8+Z5*Z9, Z1*Z7*Y-Z3*Z8+Z2*Z9,
  Z1^3, Z2^3, Z3^3, Z4^3, Z7^3,
  Z1^2*Z2, Z1^2*Z3, Z1*Z2^2, Z1*Z3^2, Z2^2*Z3, Z2*Z3^2, Z1*Z2*Z3,
  Z1^2*Z4, Z1^2*Z7, Z1*Z4^2, Z1*Z7^2, Z4^2*Z7, Z4*Z7^2, Z1*Z4*Z7;

ideal c = Z1^3, Z2^3, Z3^3, Z4^3, Z7^3, Z4*Z7*Y-Z6*Z8+Z5*Z9;
)IDEAL";

/// Verbatim copy of data/quotient.ideal.
inline constexpr std::string_view kQuotientIdeals = R"IDEAL(# The Segre product S = k[x,y,z]/(x^3) # k[a,b,c]/(a^3) presented as
# k[Z1..Z9]/b, Z1..Z9 mapping to xa,xb,xc,ya,yb,yc,za,zb,zc.
# b: all 2x2 minors of the generic 3x3 matrix plus nineteen cubic monomials.
# c: the complete intersection obtained from the link of the deformed ring
# by setting Y = 0.
field Q;
vars Z1..Z9;

ideal b =
  Z1*Z5-Z2*Z4, Z1*Z6-Z3*Z4, Z2*Z6-Z3*Z5,
  Z1*Z8-Z2*Z7, Z1*Z9-Z3*Z7, Z2*Z9-Z3*Z8,
  Z4*Z8-Z5*Z7, Z4*Z9-Z6*Z7, Z5*Z9-Z6*Z8,
  Z1^3, Z2^3, Z3^3, Z4^3, Z7^3,
  Z1^2*Z2, Z1^2*Z3, Z1*Z2^2, Z1*Z3^2, Z2^2*Z3, Z2*Z3^2, Z1*Z2*Z3,
  Z1^2*Z4, Z1^2*Z7, Z1*Z4^2, Z1*Z7^2, Z4^2*Z7, Z4*Z7^2, Z1*Z4*Z7;

ideal c = Z1^3, Z2^3, Z3^3, Z4^3, Z7^3, -Z6*Z8+Z5*Z9;
)IDEAL";

/// A step of the verification pipeline failed; `label` names the step.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string label, const std::string& what)
      : std::runtime_error(label + ": " + what), label_(std::move(label)) {}

  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

struct CounterexampleData {
  RingPtr ring;
  Ideal a;
  Ideal c;
  Polynomial y;
};

inline CounterexampleData counterexample_data(Field field) {
  IdealFile file = parse_ideal_file(kCounterexampleIdeals, field);
  Ideal a(file.ring, file.find("a"));
  Ideal c(file.ring, file.find("c"));
  return {file.ring, std::move(a), std::move(c), parse_polynomial("Y", file.ring)};
}

struct QuotientData {
  RingPtr ring;
  Ideal b;
  Ideal c;
};

inline QuotientData quotient_data(Field field) {
  IdealFile file = parse_ideal_file(kQuotientIdeals, field);
  Ideal b(file.ring, file.find("b"));
  Ideal c(file.ring, file.find("c"));
  return {file.ring, std::move(b), std::move(c)};
}

/// Image in `target` of a polynomial under `variable` -> 0, the remaining
/// variables matched by name.
inline Polynomial specialize_to_zero(const Polynomial& f, std::size_t variable, const RingPtr& target) {
  const Ring& source = *f.ring();
  std::vector<std::size_t> map(source.num_vars(), 0);
  for (std::size_t i = 0; i < source.num_vars(); ++i) {
    if (i == variable) continue;
    auto idx = target->index_of(source.names()[i]);
    if (!idx) throw std::invalid_argument("variable " + source.names()[i] + " missing from target ring");
    map[i] = *idx;
  }
  std::vector<Term> kept;
  for (const Term& t : f.terms()) {
    if (t.monomial[variable] == 0) kept.push_back(t);
  }
  return Polynomial::from_terms(f.ring(), std::move(kept)).map_to(target, map);
}

/// Summary flags of one run, plus the step-by-step report.
struct CounterexampleResult {
  std::string field;
  std::size_t codim_c = 0;
  std::size_t codim_a = 0;
  std::size_t mu_canonical = 0;
  bool quasi_gorenstein = false;
  bool y_regular = false;
  bool unmixed = false;
  std::size_t quotient_mu_canonical = 0;
  bool quotient_quasi_gorenstein = false;
  Report report;
};

/// Q and F2 carry asserted expectations; other primes run unasserted.
inline bool is_asserted_field(const Field& field) {
  return field.is_rational() || field.characteristic() == 2;
}

inline CounterexampleResult verify_counterexample(Field field) {
  CounterexampleResult out;
  out.field = field.name();
  Report& report = out.report;
  report.command = "verify-counterexample";
  report.experimental = !is_asserted_field(field);
  report.inputs_digest = digest(std::string(kCounterexampleIdeals) + std::string(kQuotientIdeals) + field.name());
  const bool assert_values = !report.experimental;
  auto expect = [&](nlohmann::json v) -> std::optional<nlohmann::json> {
    if (assert_values) return v;
    return std::nullopt;
  };
  StepTimer timer(report);

  auto stage = [](const char* label, auto&& body) {
    try {
      return body();
    } catch (const VerificationError&) {
      throw;
    } catch (const std::exception& e) {
      throw VerificationError(label, e.what());
    }
  };

  CounterexampleData data = stage("i1", [&] { return counterexample_data(field); });
  report.add("i1", "ring", data.ring->describe());
  report.add("o2", "generators of a", data.a.generators().size());
  report.add("o3", "generators of c", data.c.generators().size());

  stage("i4", [&] {
    out.codim_a = codimension(data.a);
    out.codim_c = codimension(data.c);
    return 0;
  });
  timer.lap("codim");
  report.add("o4", "codim c == codim a", out.codim_c == out.codim_a, expect(true));
  report.add("o5", "codim c == 6", out.codim_c == 6, expect(true));

  LinkagePair pair = stage("i6", [&] { return build_linkage(data.a, data.c); });
  timer.lap("link");
  report.add("o6", "generators of d = c:a", pair.linked().generators().size());

  out.mu_canonical = stage("i9", [&] { return minimal_generator_count(pair); });
  out.quasi_gorenstein = out.mu_canonical == 1;
  timer.lap("mu");
  report.add("o9", "minimal generators of d/c", out.mu_canonical, expect(9));
  report.add("qG", "R quasi-Gorenstein", out.quasi_gorenstein, expect(false));

  out.y_regular = stage("i10", [&] { return is_regular_element(data.a, data.y); });
  timer.lap("regular");
  report.add("o10", "a:Y == a", out.y_regular, expect(true));

  out.unmixed = stage("unmixed", [&] { return is_unmixed(pair); });
  timer.lap("unmixed");
  report.add("unmixed", "c:(c:a) == a", out.unmixed, expect(true));

  QuotientData quotient = stage("S", [&] { return quotient_data(field); });
  bool image_matches = stage("S.image", [&] {
    std::vector<Polynomial> image;
    const std::size_t y = *data.ring->index_of("Y");
    for (const Polynomial& g : data.a.generators()) image.push_back(specialize_to_zero(g, y, quotient.ring));
    return Ideal(quotient.ring, std::move(image)) == quotient.b;
  });
  report.add("S.image", "image of a + (Y) equals b", image_matches, expect(true));
  out.quotient_mu_canonical = stage("S.mu", [&] {
    return minimal_generator_count(build_linkage(quotient.b, quotient.c));
  });
  out.quotient_quasi_gorenstein = out.quotient_mu_canonical == 1;
  timer.lap("quotient");
  report.add("S.mu", "minimal generators of the canonical module of R/yR", out.quotient_mu_canonical, expect(1));
  report.add("S.qG", "R/yR quasi-Gorenstein", out.quotient_quasi_gorenstein, expect(true));
  return out;
}

inline nlohmann::json to_json(const CounterexampleResult& r, bool include_timings) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = r.report.command;
  j["field"] = r.field;
  j["status"] = r.report.status();
  j["inputs_digest"] = r.report.inputs_digest;
  j["codim_c"] = r.codim_c;
  j["codim_a"] = r.codim_a;
  j["codims_equal"] = r.codim_c == r.codim_a;
  j["mu_canonical"] = r.mu_canonical;
  j["quasi_gorenstein"] = r.quasi_gorenstein;
  j["y_regular"] = r.y_regular;
  j["unmixed"] = r.unmixed;
  j["quotient_mu_canonical"] = r.quotient_mu_canonical;
  j["quotient_quasi_gorenstein"] = r.quotient_quasi_gorenstein;
  j["steps"] = steps_to_json(r.report);
  j["timings_ms"] = timings_to_json(r.report, include_timings);
  return j;
}

}  // namespace qgor
