// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "properties.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>

using namespace qgor;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome counterexample(Field field) {
  CounterexampleResult r = verify_counterexample(field);
  bool ok = r.codim_c == 6 && r.codim_a == 6 && r.mu_canonical == 9 && r.y_regular && !r.quasi_gorenstein;
  return {ok, "codim " + std::to_string(r.codim_c) + "/" + std::to_string(r.codim_a) + ", mu " +
                  std::to_string(r.mu_canonical) + ", a:Y == a " + (r.y_regular ? "true" : "false") +
                  ", quasi-Gorenstein " + (r.quasi_gorenstein ? "true" : "false")};
}

Outcome quotient_mu() {
  QuotientData s = quotient_data(Field::rationals());
  std::size_t mu = minimal_generator_count(build_linkage(s.b, s.c));
  return {mu == 1, "mu " + std::to_string(mu)};
}

Outcome quotient_hilbert() {
  QuotientData s = quotient_data(Field::rationals());
  std::string values;
  bool ok = true;
  for (std::int64_t n = 0; n <= 5; ++n) {
    std::int64_t a = (n + 2) * (n + 1) / 2, b = n >= 3 ? (n - 1) * (n - 2) / 2 : 0;
    std::uint64_t expected = static_cast<std::uint64_t>((a - b) * (a - b));
    std::uint64_t got = hilbert_function(s.b, static_cast<std::uint64_t>(n));
    ok = ok && got == expected;
    values += (n ? "," : "") + std::to_string(got);
  }
  return {ok, values};
}

QDivisor d1() { return parse_divisor("2*P(0) - 5/8*P(1) - 5/8*P(2) - 5/8*P(3)"); }
QDivisor d2() {
  std::string text = "5*Q(0)";
  for (int i = 1; i <= 9; ++i) text += " - 1/2*Q(" + std::to_string(i) + ")";
  return parse_divisor(text);
}

Outcome divisors() {
  bool ok = true;
  for (long n = 0; n <= 10; ++n) ok = ok && h0(floor_multiple(d2(), 2 * n)) == n + 1;
  ok = ok && h1(floor_multiple(d2(), 3)) == 2;
  GeneratorDegrees g2 = generator_degrees(d2(), 18);
  GeneratorDegrees g1 = generator_degrees(d1(), 24);
  ok = ok && g2.generators == std::vector<long>{2, 2, 9} && g2.relations == std::vector<long>{18};
  ok = ok && g1.generators == std::vector<long>{3, 8, 8} && g1.relations == std::vector<long>{24};
  ok = ok && watanabe_gorenstein(d1(), 5) && watanabe_gorenstein(d2(), 5);
  for (long a = 1; a <= 4; ++a) ok = ok && !watanabe_gorenstein(d1(), a) && !watanabe_gorenstein(d2(), a);
  return {ok, "D2 generators 2,2,9 relation 18; D1 generators 3,8,8 relation 24; a = 5"};
}

Outcome kunneth() {
  CohomologyTable t1 = CohomologyTable::projective_line(d1());
  CohomologyTable t2 = CohomologyTable::projective_line(d2());
  CohomologyTable e = CohomologyTable::elliptic_cubic();
  long a = segre_local_cohomology_dim(t1, t2, 2, 3);
  long b = segre_local_cohomology_dim(e, e, 2, 0);
  bool qg = quasi_gorenstein_hilbert_check(e, e, 0, -5, 5);
  return {a == 2 && b == 2 && qg, "H^2 dims " + std::to_string(a) + ", " + std::to_string(b) +
                                      "; elliptic Hilbert check " + (qg ? "true" : "false")};
}

Outcome properties() {
  using namespace qgor::testing;
  const std::vector<std::pair<const char*, SuiteResult>> suites{
      {"membership+closure", membership_suite()},
      {"dimension", dimension_suite()},
      {"complete intersections", complete_intersection_suite()},
      {"Riemann-Roch/Serre", riemann_roch_suite()},
  };
  bool ok = true;
  std::string detail;
  for (const auto& [name, r] : suites) {
    ok = ok && r.ok();
    detail += (detail.empty() ? "" : "; ") + std::string(name) + " " + std::to_string(r.cases - r.failures) + "/" +
              std::to_string(r.cases);
    if (!r.ok()) detail += " (first failure: " + r.first_failure + ")";
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 counterexample over Q", [] { return counterexample(Field::rationals()); }},
      {"2 counterexample over F2", [] { return counterexample(Field::prime(2)); }},
      {"3 quotient ring is quasi-Gorenstein", quotient_mu},
      {"4 quotient Hilbert function", quotient_hilbert},
      {"5 divisor suite", divisors},
      {"6 Kunneth witnesses", kunneth},
      {"7 property suites", properties},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << " (" << s << " s)\n";
    failures += o.ok ? 0 : 1;
  }
  return failures ? 1 : 0;
}
