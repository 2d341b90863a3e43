// qgor command line: counterexample verification plus ideal and divisor
// calculators. Exit codes: 0 ok, 1 bad input, 2 failed check or internal
// error, 3 unsupported request.

#include "qgor/qgor.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace qgor;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailure = 2;
constexpr int kExitUnsupported = 3;

// Bad user input, reported with exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long to_long(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("expected an integer for ") + what + ", got '" + s + "'");
}

json result_envelope(const std::string& command, const std::string& inputs, json result) {
  return json{{"schema_version", kReportSchemaVersion},
              {"command", command},
              {"status", "ok"},
              {"inputs_digest", digest(inputs)},
              {"result", std::move(result)}};
}

json polys_to_json(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const Polynomial& p : ps) out.push_back(p.to_string());
  return out;
}

// ---- verify-counterexample ------------------------------------------------

struct VerifyOptions {
  std::string field = "Q";
  bool json = false;
  bool trace = false;
  bool timings = false;
};

int run_verify(const VerifyOptions& o) {
  Field field = parse_field(o.field);
  ScopedTrace trace(o.trace ? &std::cerr : nullptr);
  CounterexampleResult r = verify_counterexample(field);
  if (o.json) {
    std::cout << to_json(r, o.timings).dump(2) << "\n";
  } else {
    std::cout << render_text(r.report, o.timings);
    if (r.report.experimental) std::cout << "experimental field, no assertions\n";
  }
  for (const ReportStep& s : r.report.steps) {
    if (!s.passed()) {
      std::cerr << "check failed at " << s.label << "\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

// ---- ideal ----------------------------------------------------------------

struct IdealOptions {
  std::string op;
  std::vector<std::string> args;
  std::string ring_file;
  bool json = false;
  bool trace = false;
};

int run_ideal(const IdealOptions& o) {
  const std::string text = read_file(o.ring_file);
  IdealFile file = parse_ideal_file(text);
  if (file.ideals.empty()) throw InputError(o.ring_file + " declares no ideals");
  const RingPtr& ring = file.ring;
  ScopedTrace trace(o.trace ? &std::cerr : nullptr);

  auto ideal_named = [&](const std::string& name) {
    try {
      return Ideal(ring, file.find(name));
    } catch (const std::out_of_range& e) {
      throw InputError(e.what());
    }
  };
  // Optional trailing ideal name; defaults to the first ideal in the file.
  auto ideal_at = [&](std::size_t pos) {
    return pos < o.args.size() ? ideal_named(o.args[pos]) : Ideal(ring, file.ideals.front().second);
  };
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (o.args.size() < lo || o.args.size() > hi) {
      throw InputError("wrong number of arguments for '" + o.op + "'");
    }
  };

  json result;
  std::string text_out;
  if (o.op == "gb") {
    need(0, 1);
    std::vector<Polynomial> gb = ideal_at(0).groebner_basis().elements();
    result = polys_to_json(gb);
    for (const Polynomial& g : gb) text_out += g.to_string() + "\n";
  } else if (o.op == "dim" || o.op == "codim") {
    need(0, 1);
    Ideal i = ideal_at(0);
    std::size_t v = o.op == "dim" ? dimension(i) : codimension(i);
    result = v;
    text_out = std::to_string(v) + "\n";
  } else if (o.op == "colon" || o.op == "intersect") {
    need(2, 2);
    Ideal a = ideal_named(o.args[0]);
    Ideal b = ideal_named(o.args[1]);
    Ideal r = o.op == "colon" ? colon(a, b) : intersect(a, b);
    std::vector<Polynomial> gb = r.groebner_basis().elements();
    result = polys_to_json(gb);
    for (const Polynomial& g : gb) text_out += g.to_string() + "\n";
  } else if (o.op == "eliminate") {
    if (o.args.size() < 2) throw InputError("usage: eliminate IDEAL VAR...");
    std::vector<std::string> vars(o.args.begin() + 1, o.args.end());
    for (const std::string& v : vars) {
      if (!ring->index_of(v)) throw InputError("unknown variable " + v);
    }
    Ideal r = eliminate(ideal_named(o.args[0]), vars);
    std::vector<Polynomial> gb = r.groebner_basis().elements();
    result = polys_to_json(gb);
    for (const Polynomial& g : gb) text_out += g.to_string() + "\n";
  } else if (o.op == "member" || o.op == "regular") {
    need(1, 2);
    Polynomial f = parse_polynomial(o.args[0], ring);
    Ideal i = ideal_at(1);
    bool v = o.op == "member" ? i.contains(f) : is_regular_element(i, f);
    result = v;
    text_out = v ? "true\n" : "false\n";
  } else if (o.op == "hilbert") {
    need(1, 2);
    long n = to_long(o.args[0], "degree");
    if (n < 0) throw InputError("degree must be non-negative");
    std::uint64_t v = hilbert_function(ideal_at(1), static_cast<std::uint64_t>(n));
    result = v;
    text_out = std::to_string(v) + "\n";
  } else {
    throw InputError("unknown ideal operation '" + o.op + "'");
  }

  std::string inputs = text + "\n" + o.op;
  for (const std::string& a : o.args) inputs += "\n" + a;
  if (o.json) {
    std::cout << result_envelope("ideal " + o.op, inputs, result).dump(2) << "\n";
  } else {
    std::cout << text_out;
  }
  return kExitOk;
}

// ---- divisor --------------------------------------------------------------

struct DivisorOptions {
  std::string op;
  std::vector<std::string> divisors;
  long n = 0;
  long bound = 24;
  long a = 0;
  long lo = -5;
  long hi = 5;
  bool json = false;
};

// Named examples; anything else is parsed as divisor text.
QDivisor divisor_from_flag(const std::string& value) {
  if (value == "D1") return parse_divisor("2*P(0) - 5/8*P(1) - 5/8*P(2) - 5/8*P(3)");
  if (value == "D2") {
    std::string text = "5*Q(0)";
    for (int i = 1; i <= 9; ++i) text += " - 1/2*Q(" + std::to_string(i) + ")";
    return parse_divisor(text);
  }
  return parse_divisor(value);
}

CohomologyTable table_from_flag(const std::string& value) {
  if (value == "elliptic") return CohomologyTable::elliptic_cubic();
  return CohomologyTable::projective_line(divisor_from_flag(value));
}

std::string join(const std::vector<long>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (long x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

int run_divisor(const DivisorOptions& o) {
  const bool segre = o.op.rfind("segre-", 0) == 0;
  const std::size_t wanted = segre ? 2 : 1;
  if (o.divisors.size() != wanted) {
    throw InputError("'" + o.op + "' takes exactly " + std::to_string(wanted) + " --divisor value(s)");
  }

  json result;
  std::string text_out;
  if (!segre) {
    if (o.divisors[0] == "elliptic") throw InputError("'elliptic' is only a Segre factor");
    QDivisor d = divisor_from_flag(o.divisors[0]);
    if (o.op == "h0" || o.op == "h1") {
      IntegralDivisor e = floor_multiple(d, o.n);
      long v = o.op == "h0" ? h0(e) : h1(e);
      result = v;
      text_out = std::to_string(v) + "\n";
    } else if (o.op == "floor") {
      IntegralDivisor e = floor_multiple(d, o.n);
      result = json{{"divisor", e.to_string()}, {"degree", e.degree()}};
      text_out = e.to_string() + "  (degree " + std::to_string(e.degree()) + ")\n";
    } else if (o.op == "gens") {
      GeneratorDegrees g = generator_degrees(d, o.bound);
      result = json{{"generators", g.generators}, {"relations", g.relations}, {"warning", g.warning}};
      text_out = "generators: " + join(g.generators) + "; relation: " + join(g.relations) + "\n";
      if (!g.warning.empty()) text_out += "warning: " + g.warning + "\n";
    } else if (o.op == "watanabe") {
      bool v = watanabe_gorenstein(d, o.a);
      result = v;
      text_out = v ? "true\n" : "false\n";
    } else {
      throw InputError("unknown divisor operation '" + o.op + "'");
    }
  } else {
    CohomologyTable t1 = table_from_flag(o.divisors[0]);
    CohomologyTable t2 = table_from_flag(o.divisors[1]);
    if (o.op == "segre-h2") {
      long v = segre_local_cohomology_dim(t1, t2, 2, o.n);
      result = json{{"dimension", v}, {"non_cohen_macaulay_witness", v != 0}};
      text_out = std::to_string(v) + (v != 0 ? "  (non-Cohen-Macaulay witness)" : "") + "\n";
    } else if (o.op == "segre-qg") {
      if (o.lo > o.hi) throw InputError("--lo must not exceed --hi");
      bool v = quasi_gorenstein_hilbert_check(t1, t2, o.a, o.lo, o.hi);
      result = v;
      text_out = std::string(v ? "true" : "false") + "  (Hilbert function test; necessary condition only)\n";
    } else {
      throw InputError("unknown divisor operation '" + o.op + "'");
    }
  }

  std::string inputs = o.op + "\n" + std::to_string(o.n) + "\n" + std::to_string(o.bound) + "\n" +
                       std::to_string(o.a) + "\n" + std::to_string(o.lo) + ":" + std::to_string(o.hi);
  for (const std::string& d : o.divisors) inputs += "\n" + d;
  if (o.json) {
    std::cout << result_envelope("divisor " + o.op, inputs, result).dump(2) << "\n";
  } else {
    std::cout << text_out;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qgor: linkage, canonical modules and Q-divisor section rings"};
  app.require_subcommand(1);

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify-counterexample", "Recompute the linkage counterexample");
  verify_cmd->add_option("--field", verify.field, "Q, F2 or Fp:<p>")->capture_default_str();
  verify_cmd->add_flag("--json", verify.json, "JSON report");
  verify_cmd->add_flag("--trace", verify.trace, "Groebner basis trace on stderr");
  verify_cmd->add_flag("--timings", verify.timings, "Include wall-clock timings");

  IdealOptions ideal;
  CLI::App* ideal_cmd = app.add_subcommand("ideal", "Operations on ideals from a ring file");
  ideal_cmd->add_option("op", ideal.op, "gb|dim|codim|colon|intersect|eliminate|member|hilbert|regular")
      ->required();
  ideal_cmd->add_option("args", ideal.args, "Operation arguments");
  ideal_cmd->add_option("--ring", ideal.ring_file, "Ring and ideal file")->required();
  ideal_cmd->add_flag("--json", ideal.json, "JSON output");
  ideal_cmd->add_flag("--trace", ideal.trace, "Groebner basis trace on stderr");

  DivisorOptions div;
  CLI::App* div_cmd = app.add_subcommand("divisor", "Q-divisors on P^1 and Segre products");
  div_cmd->add_option("op", div.op, "h0|h1|floor|gens|watanabe|segre-h2|segre-qg")->required();
  div_cmd->add_option("--divisor", div.divisors, "Divisor text, D1, D2 or elliptic (repeat for Segre ops)")
      ->required();
  div_cmd->add_option("--n", div.n, "Degree");
  div_cmd->add_option("--bound", div.bound, "Degree bound for gens")->capture_default_str();
  div_cmd->add_option("--a", div.a, "a-invariant");
  div_cmd->add_option("--lo", div.lo, "Range start for segre-qg")->capture_default_str();
  div_cmd->add_option("--hi", div.hi, "Range end for segre-qg")->capture_default_str();
  div_cmd->add_flag("--json", div.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*verify_cmd) return run_verify(verify);
    if (*ideal_cmd) return run_ideal(ideal);
    return run_divisor(div);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed at " << e.label() << ": " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}
