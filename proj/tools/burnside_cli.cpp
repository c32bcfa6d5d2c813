// burnside-cli: matrix-family analysis from the command line.
//
// Exit codes: 0 success or consistent verdict; 2 hypothesis fails or not
// triangularizable; 3 incomplete or inconclusive; 4 usage or parse error;
// 5 counterexample candidate, structure violation, or failed re-verification.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "burnside/burnside.hpp"
#include "burnside/errors.hpp"
#include "burnside/family.hpp"
#include "burnside/serialize.hpp"

using namespace burnside;

namespace {

enum Exit { kOk = 0, kNegative = 2, kIncomplete = 3, kUsage = 4, kAnomaly = 5 };

struct Flags {
  std::string file;
  std::size_t cap = kDefaultCap;
  std::uint64_t seed = 0;
  std::size_t budget = 64;
  std::string emit = "text";
  std::string subfield;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::TheoremInstanceVerified:
      return kOk;
    case Verdict::HypothesisFails:
      return kNegative;
    case Verdict::Incomplete:
      return kIncomplete;
    case Verdict::CounterexampleCandidate:
      return kAnomaly;
  }
  return kAnomaly;
}

std::string join(const Json& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += " ";
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

void print_matrix(std::ostream& os, const Json& m, const std::string& indent) {
  for (const auto& row : m) os << indent << "[ " << join(row) << " ]\n";
}

void print_verdict(std::ostream& os, const Json& v, const std::string& indent) {
  os << indent << "irreducibility: " << v["status"].get<std::string>() << " (" << v["rounds"] << " rounds)\n";
  if (!v["witness"].is_null()) {
    os << indent << "  invariant subspace of dim " << v["witness"]["dim"] << ":\n";
    for (const auto& b : v["witness"]["basis"]) os << indent << "    ( " << join(b) << " )\n";
  }
  if (!v["certificate"].is_null()) {
    const Json& c = v["certificate"];
    os << indent << "  certificate: " << c["kind"].get<std::string>();
    if (!c["factor"].is_null()) os << ", factor coefficients " << join(c["factor"]);
    os << "\n";
  }
}

void print_header(std::ostream& os, const Json& r) {
  os << r["command"].get<std::string>() << " over " << r["field"].get<std::string>();
  if (!r["subfield"].is_null()) os << " with subfield " << r["subfield"].get<std::string>();
  os << ", n = " << r["n"] << ", " << r["generators"].size() << " generator(s)\n";
  if (r.contains("closure")) {
    const Json& c = r["closure"];
    os << "closure: " << c["size"] << " elements, " << (c["complete"].get<bool>() ? "complete" : "truncated")
       << " (cap " << c["cap"] << ")\n";
  }
}

void print_element_witness(std::ostream& os, const Json& w) {
  if (w.is_null()) return;
  os << "    witness: element " << w["index"] << ", word " << join(w["word"]) << "\n";
  print_matrix(os, w["matrix"], "      ");
  os << "    char poly coefficients: " << join(w["char_poly"]) << "\n";
  if (w.contains("eigenvalue") && !w["eigenvalue"].is_null())
    os << "    eigenvalue outside subfield: " << w["eigenvalue"].get<std::string>() << "\n";
}

void render_text(std::ostream& os, const Json& r) {
  const std::string command = r["command"].get<std::string>();
  if (command == "quat-decompose") {
    os << "quat-decompose, n = " << r["n"] << "\n";
    for (const auto& d : r["decompositions"]) {
      os << "matrix:\n";
      print_matrix(os, d["matrix"], "  ");
      os << "scalar: " << d["scalar"].get<std::string>() << "\n";
      os << "nilpotent terms: " << d["terms"].size() << "\n";
      for (const auto& t : d["terms"]) {
        os << "  coefficient " << t["coefficient"].get<std::string>() << ":\n";
        print_matrix(os, t["nilpotent"], "    ");
      }
    }
    return;
  }
  print_header(os, r);
  if (command == "burnside-check" || command == "descent-check") {
    os << "hypotheses:\n";
    for (const auto& h : r["hypotheses"]) {
      os << "  " << h["name"].get<std::string>() << ": " << h["status"].get<std::string>() << "\n";
      if (h["name"] == "irreducible") {
        print_verdict(os, h["witness"], "    ");
      } else {
        print_element_witness(os, h["witness"]);
      }
    }
    const Json& c = r["conclusion"];
    os << "conclusion: " << c["name"].get<std::string>() << ": " << c["status"].get<std::string>() << "\n";
    const Json& d = c["data"];
    if (command == "burnside-check") {
      print_verdict(os, d["irreducibility"], "  ");
      os << "  algebra dimension: " << d["algebra_dim"] << " (n^2 = " << d["n_squared"] << ")\n";
      if (!d["division_degree"].is_null()) os << "  division degree r: " << d["division_degree"]["r"] << "\n";
      if (!d["structure_violation"].is_null())
        os << "  STRUCTURE VIOLATION: " << d["structure_violation"].get<std::string>() << "\n";
    } else {
      os << "  dim over subfield: " << d["dim_over_subfield"] << ", dim over field: " << d["dim_over_field"]
         << " (n^2 = " << d["n_squared"] << "): " << d["dimension_status"].get<std::string>() << "\n";
      os << "  similarity: " << d["similarity_status"].get<std::string>() << "\n";
      if (!d["similarity"].is_null()) {
        os << "  P =\n";
        print_matrix(os, d["similarity"]["p"], "    ");
      }
      if (!d["similarity_failure"].is_null()) os << "  " << d["similarity_failure"].get<std::string>() << "\n";
      os << "  traces in subfield: " << (d["traces_in_subfield"].get<bool>() ? "yes" : "no")
         << ", not all zero: " << (d["traces_nonzero"].get<bool>() ? "yes" : "no") << ": "
         << d["trace_status"].get<std::string>() << "\n";
    }
    os << "verdict: " << r["verdict"].get<std::string>() << "\n";
  } else if (command == "triangularize") {
    os << "result: " << r["result"].get<std::string>() << "\n";
    if (!r["p"].is_null()) {
      os << "P =\n";
      print_matrix(os, r["p"], "  ");
      std::size_t i = 0;
      for (const auto& m : r["conjugated"]) {
        os << "P^-1 G" << i++ << " P =\n";
        print_matrix(os, m, "  ");
      }
    } else {
      os << "obstruction: " << r["obstruction"]["description"].get<std::string>() << "\n";
    }
  } else if (command == "chop") {
    os << (r["complete"].get<bool>() ? "composition series" : "partial chain (incomplete)") << ", dims";
    for (const auto& s : r["chain"]) os << " " << s["dim"];
    os << "\nquotient dims: " << join(r["quotient_dims"]) << "\n";
    if (!r["error"].is_null()) os << "stopped: " << r["error"].get<std::string>() << "\n";
  } else if (command == "analyze") {
    os << "all elements triangularizable: " << r["triangularizable"]["status"].get<std::string>() << "\n";
    print_element_witness(os, r["triangularizable"]["witness"]);
    print_verdict(os, r["irreducibility"], "");
    os << "algebra dimension: " << r["algebra_dim"] << "\n";
    if (!r["division_degree"].is_null()) os << "centralizer dimension: " << r["division_degree"]["r"] << "\n";
    if (r["composition_dims"].is_null()) {
      os << "composition factors: undecided\n";
    } else {
      os << "composition factor dims: " << join(r["composition_dims"]) << "\n";
    }
  }
}

void emit(const Json& report, const Flags& flags) {
  if (flags.emit == "machine") {
    std::cout << report.dump(2) << "\n";
  } else {
    render_text(std::cout, report);
  }
}

ReportInput input_from(const FamilyFile& family, const Flags& flags) {
  ReportInput in{family.field, family.subfield, family.matrices, {flags.cap, flags.seed, flags.budget}};
  if (!flags.subfield.empty()) {
    const Field sub = Field::parse(flags.subfield);
    if (!is_supported_tower(sub, family.field)) {
      throw UnsupportedTower(flags.subfield + " is not a supported subfield of " + family.field.to_string());
    }
    in.subfield = sub;
  }
  return in;
}

int run(const std::string& command, const Flags& flags) {
  if (command == "verify") {
    std::ifstream file(flags.file);
    if (!file) throw UsageError("cannot read " + flags.file);
    Json report;
    try {
      report = Json::parse(file);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("malformed report: ") + e.what());
    }
    ReportCheck result;
    try {
      result = verify_report(report);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("malformed report: ") + e.what());
    }
    if (result.ok) {
      std::cout << "verified: " << report.at("command").get<std::string>() << " report rechecks\n";
      return kOk;
    }
    for (const auto& f : result.failures) std::cout << "FAILED: " << f << "\n";
    return kAnomaly;
  }

  const FamilyFile family = parse_family_file(flags.file);
  if (command == "quat-decompose") {
    if (!family.quaternion) throw UsageError("quat-decompose needs a quaternion file");
    if (family.n < 2) throw UsageError("quat-decompose needs n >= 2");
    std::vector<NilpotentDecomposition> parts;
    for (const auto& x : family.quaternion_matrices) parts.push_back(nilpotent_span_decomposition(x));
    emit(quat_report_json(family.quaternion_matrices, parts), flags);
    return kOk;
  }

  const ReportInput in = input_from(family, flags);
  if (command == "burnside-check") {
    const BurnsideReport report = check_burnside_general_field(in.generators, in.options);
    emit(burnside_report_json(in, report), flags);
    return report.structure_violation ? kAnomaly : verdict_exit(report.verdict);
  }
  if (command == "descent-check") {
    if (!in.subfield) throw UsageError("descent-check needs a subfield (file line or --subfield)");
    const DescentReport report = check_spectra_descent(in.generators, *in.subfield, in.options);
    emit(descent_report_json(in, report), flags);
    return verdict_exit(report.verdict);
  }
  if (command == "triangularize") {
    const auto result = triangularize_family(in.generators);
    emit(triangularize_report_json(in, result), flags);
    return std::holds_alternative<Triangularization>(result) ? kOk : kNegative;
  }
  if (command == "chop") {
    try {
      const InvariantChain chain = composition_series(in.generators, {in.options.seed, in.options.budget});
      emit(chop_report_json(in, chain, std::nullopt), flags);
      return kOk;
    } catch (const ChopIncomplete& e) {
      emit(chop_report_json(in, e.partial(), std::string(e.what())), flags);
      return kIncomplete;
    }
  }
  if (command == "analyze") {
    const Analysis analysis = analyze_family(in.generators, in.options);
    emit(analyze_report_json(in, analysis), flags);
    return analysis.irreducibility.status == Irreducibility::Inconclusive ? kIncomplete : kOk;
  }
  throw UsageError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducibility, triangularization and descent checks for matrix semigroups"};
  app.require_subcommand(1);
  Flags flags;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "closure, irreducibility, algebra dimension and composition factors"},
      {"burnside-check", "irreducible iff absolutely irreducible, for triangularizable semigroups"},
      {"descent-check", "spectra in a subfield F: similarity to M_n(F)"},
      {"triangularize", "simultaneous triangularization or an obstruction"},
      {"chop", "composition series"},
      {"quat-decompose", "identity plus square-zero decomposition of quaternion matrices"},
      {"verify", "recheck a machine report"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("file", flags.file, name == "verify" ? "machine report" : "family file")->required();
    if (name == "verify") continue;
    sub->add_option("--cap", flags.cap, "closure size limit")->check(CLI::PositiveNumber);
    sub->add_option("--seed", flags.seed, "random seed");
    sub->add_option("--budget", flags.budget, "random candidates for the irreducibility test");
    sub->add_option("--emit", flags.emit, "report format")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--subfield", flags.subfield, "subfield spec, overriding the file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, flags);
  } catch (const StructureViolation& e) {
    std::cerr << "structure violation: " << e.what() << "\n";
    return kAnomaly;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
