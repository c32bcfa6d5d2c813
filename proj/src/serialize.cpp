#include "burnside/serialize.hpp"

#include <map>

#include "burnside/algebra.hpp"
#include "burnside/errors.hpp"

namespace burnside {

namespace {

std::string kind_name(NortonCertificate::Kind kind) { return to_string(kind); }

NortonCertificate::Kind kind_from_name(const std::string& name) {
  using Kind = NortonCertificate::Kind;
  for (Kind k : {Kind::NullityEqualsDegree, Kind::KernelEnumerated, Kind::Exhaustive, Kind::Trivial})
    if (to_string(k) == name) return k;
  throw ParseError("unknown certificate kind", name);
}

Irreducibility irreducibility_from_name(const std::string& name) {
  for (Irreducibility s : {Irreducibility::Irreducible, Irreducibility::Reducible, Irreducibility::Inconclusive})
    if (to_string(s) == name) return s;
  throw ParseError("unknown irreducibility status", name);
}

Json options_json(const CheckOptions& o) {
  Json j;
  j["cap"] = o.cap;
  j["seed"] = o.seed;
  j["budget"] = o.budget;
  return j;
}

Json header(const std::string& command, const ReportInput& input) {
  Json j;
  j["command"] = command;
  j["field"] = field_spec(input.field);
  j["subfield"] = input.subfield ? Json(field_spec(*input.subfield)) : Json(nullptr);
  j["n"] = input.generators.empty() ? 0 : input.generators[0].rows();
  Json gens = Json::array();
  for (const auto& g : input.generators) gens.push_back(to_json(g));
  j["generators"] = gens;
  j["options"] = options_json(input.options);
  return j;
}

Json closure_json(const SemigroupClosure& s) {
  Json j;
  j["size"] = s.size();
  j["complete"] = s.complete;
  j["cap"] = s.cap;
  j["pairs_checked"] = s.pairs_checked;
  j["direct_pairs_checked"] = s.direct_pairs_checked;
  return j;
}

Json element_witness(const SemigroupClosure& s, std::size_t index, const Polynomial& chi) {
  Json j;
  j["index"] = index;
  j["word"] = s.words[index];
  j["matrix"] = to_json(s.elements[index]);
  j["char_poly"] = to_json(chi);
  return j;
}

Json division_json(const std::optional<DivisionDegree>& d) {
  if (!d) return nullptr;
  Json j;
  j["r"] = d->r;
  j["dim_check"] = d->dim_check;
  return j;
}

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

}  // namespace

std::string field_spec(const Field& field) {
  if (field.is_rationals() || field.degree() == 1) return field.to_string();
  if (Field::finite(field.characteristic(), field.degree()) == field) return field.to_string();
  std::vector<FieldElement> coeffs;
  const Field prime = field.prime_field();
  for (std::uint64_t c : field.modulus()) coeffs.push_back(prime.from_code(c));
  return "GF(" + std::to_string(field.order()) + ":" + Polynomial(prime, coeffs).to_string("t") + ")";
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json to_json(std::span<const FieldElement> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json to_json(const Polynomial& p) { return to_json(std::span<const FieldElement>(p.coeffs())); }

Json to_json(const Subspace& s) {
  Json j;
  j["dim"] = s.dim();
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(std::span<const FieldElement>(v)));
  j["basis"] = basis;
  return j;
}

Json to_json(const IrreducibilityVerdict& verdict) {
  Json j;
  j["status"] = to_string(verdict.status);
  j["rounds"] = verdict.rounds;
  j["witness"] = verdict.witness ? to_json(*verdict.witness) : Json(nullptr);
  if (verdict.certificate) {
    const auto& c = *verdict.certificate;
    Json cert;
    cert["kind"] = kind_name(c.kind);
    cert["element"] = c.element ? to_json(*c.element) : Json(nullptr);
    cert["factor"] = c.factor ? to_json(*c.factor) : Json(nullptr);
    cert["kernel_vector"] = c.kernel_vector ? to_json(std::span<const FieldElement>(*c.kernel_vector)) : Json(nullptr);
    cert["dual_vector"] = c.dual_vector ? to_json(std::span<const FieldElement>(*c.dual_vector)) : Json(nullptr);
    j["certificate"] = cert;
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

Json to_json(const QuaternionMatrix& x) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < x.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(x(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const Field& field) {
  const std::size_t rows = j.size();
  if (rows == 0) throw ShapeMismatch("empty matrix in report");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols, field.zero());
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw ShapeMismatch("ragged matrix in report");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.parse_element(j[r][c].get<std::string>());
  }
  return m;
}

Vector vector_from_json(const Json& j, const Field& field) {
  Vector v;
  for (const auto& x : j) v.push_back(field.parse_element(x.get<std::string>()));
  return v;
}

Polynomial polynomial_from_json(const Json& j, const Field& field) { return Polynomial(field, vector_from_json(j, field)); }

Subspace subspace_from_json(const Json& j, const Field& field, std::size_t ambient) {
  std::vector<Vector> basis;
  for (const auto& v : j.at("basis")) basis.push_back(vector_from_json(v, field));
  for (const auto& v : basis)
    if (v.size() != ambient) throw ShapeMismatch("subspace vector has the wrong length");
  return Subspace::span(field, ambient, basis);
}

IrreducibilityVerdict verdict_from_json(const Json& j, const Field& field, std::size_t n) {
  IrreducibilityVerdict v{irreducibility_from_name(j.at("status").get<std::string>()), std::nullopt, std::nullopt,
                          j.at("rounds").get<std::size_t>()};
  if (!j.at("witness").is_null()) v.witness = subspace_from_json(j["witness"], field, n);
  if (const Json& c = j.at("certificate"); !c.is_null()) {
    NortonCertificate cert{kind_from_name(c.at("kind").get<std::string>()), std::nullopt, std::nullopt,
                           std::nullopt, std::nullopt};
    if (!c.at("element").is_null()) cert.element = matrix_from_json(c["element"], field);
    if (!c.at("factor").is_null()) cert.factor = polynomial_from_json(c["factor"], field);
    if (!c.at("kernel_vector").is_null()) cert.kernel_vector = vector_from_json(c["kernel_vector"], field);
    if (!c.at("dual_vector").is_null()) cert.dual_vector = vector_from_json(c["dual_vector"], field);
    v.certificate = std::move(cert);
  }
  return v;
}

QuaternionMatrix quaternion_matrix_from_json(const Json& j) {
  const std::size_t n = j.size();
  if (n == 0) throw ShapeMismatch("empty quaternion matrix in report");
  QuaternionMatrix x = quaternion_zero(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (j[r].size() != n) throw ShapeMismatch("quaternion matrix in report is not square");
    for (std::size_t c = 0; c < n; ++c) x(r, c) = Quaternion::parse(j[r][c].get<std::string>());
  }
  return x;
}

Json burnside_report_json(const ReportInput& input, const BurnsideReport& report) {
  Json j = header("burnside-check", input);
  j["closure"] = closure_json(report.closure);

  Json h1;
  h1["name"] = "all-elements-triangularizable";
  h1["status"] = to_string(report.triangularizable.status);
  h1["witness"] = report.triangularizable.witness
                      ? element_witness(report.closure, *report.triangularizable.witness,
                                        *report.triangularizable.char_poly)
                      : Json(nullptr);
  j["hypotheses"] = Json::array({h1});

  Json data;
  data["irreducibility"] = to_json(report.irreducibility);
  data["algebra_dim"] = report.algebra_dim;
  data["n_squared"] = report.n * report.n;
  data["division_degree"] = division_json(report.division);
  data["structure_violation"] = optional_string(report.structure_violation);
  Json conclusion;
  conclusion["name"] = "irreducible-iff-absolutely-irreducible";
  conclusion["status"] = to_string(report.conclusion);
  conclusion["data"] = data;
  j["conclusion"] = conclusion;
  j["verdict"] = to_string(report.verdict);
  return j;
}

Json descent_report_json(const ReportInput& input, const DescentReport& report) {
  Json j = header("descent-check", input);
  j["closure"] = closure_json(report.closure);

  Json h1;
  h1["name"] = "spectra-in-subfield";
  h1["status"] = to_string(report.spectra.status);
  if (report.spectra.witness) {
    Json w = element_witness(report.closure, *report.spectra.witness, *report.spectra.char_poly);
    w["eigenvalue"] = report.spectra.eigenvalue ? Json(report.spectra.eigenvalue->to_string()) : Json(nullptr);
    h1["witness"] = w;
  } else {
    h1["witness"] = nullptr;
  }
  Json h2;
  h2["name"] = "irreducible";
  h2["status"] = to_string(report.irreducible_status);
  h2["witness"] = to_json(report.irreducibility);
  j["hypotheses"] = Json::array({h1, h2});

  Json data;
  data["dim_over_subfield"] = report.dim_over_subfield;
  data["dim_over_field"] = report.dim_over_field;
  data["n_squared"] = report.n * report.n;
  data["dimension_status"] = to_string(report.dimension_status);
  if (report.similarity) {
    Json sim;
    sim["p"] = to_json(report.similarity->p);
    sim["pivot_element"] = to_json(report.similarity->pivot_element);
    sim["eigenvalue"] = report.similarity->eigenvalue.to_string();
    sim["candidates_tried"] = report.similarity->candidates_tried;
    data["similarity"] = sim;
  } else {
    data["similarity"] = nullptr;
  }
  data["similarity_status"] = to_string(report.similarity_status);
  data["similarity_failure"] = optional_string(report.similarity_failure);
  data["traces_in_subfield"] = report.traces_in_subfield;
  data["traces_nonzero"] = report.traces_nonzero;
  data["trace_status"] = to_string(report.trace_status);
  Json conclusion;
  conclusion["name"] = "similar-to-full-matrix-algebra-over-subfield";
  conclusion["status"] = to_string(report.conclusion);
  conclusion["data"] = data;
  j["conclusion"] = conclusion;
  j["verdict"] = to_string(report.verdict);
  return j;
}

Json triangularize_report_json(const ReportInput& input,
                               const std::variant<Triangularization, NotTriangularizable>& result) {
  Json j = header("triangularize", input);
  if (const auto* t = std::get_if<Triangularization>(&result)) {
    j["result"] = "Triangularized";
    j["p"] = to_json(t->p);
    Json conj = Json::array();
    for (const auto& m : t->conjugated) conj.push_back(to_json(m));
    j["conjugated"] = conj;
    j["obstruction"] = nullptr;
  } else {
    const auto& nt = std::get<NotTriangularizable>(result);
    j["result"] = "NotTriangularizable";
    j["p"] = nullptr;
    j["conjugated"] = nullptr;
    Json o;
    o["kind"] = nt.kind == NotTriangularizable::Kind::NonSplitCharPoly ? "NonSplitCharPoly" : "NoCommonEigenvector";
    o["generator"] = nt.generator;
    o["factor"] = nt.factor ? to_json(*nt.factor) : Json(nullptr);
    o["depth"] = nt.depth;
    o["ambient_dim"] = nt.ambient_dim;
    o["description"] = nt.describe();
    j["obstruction"] = o;
  }
  return j;
}

Json chop_report_json(const ReportInput& input, const InvariantChain& chain, const std::optional<std::string>& error) {
  Json j = header("chop", input);
  j["complete"] = !error.has_value();
  Json subspaces = Json::array();
  for (const auto& s : chain.subspaces) subspaces.push_back(to_json(s));
  j["chain"] = subspaces;
  j["quotient_dims"] = chain.quotient_dims;
  j["error"] = optional_string(error);
  return j;
}

Analysis analyze_family(std::span<const Matrix> generators, const CheckOptions& options) {
  SemigroupClosure closure = semigroup_closure(generators, options.cap);
  TriangularizabilityCheck tri = all_elements_triangularizable(closure);
  IrreducibilityVerdict irr = find_invariant_subspace(generators, {options.seed, options.budget});
  const AlgebraBasis alg = algebra_closure(generators, true);
  Analysis a{std::move(closure), std::move(tri), std::move(irr), alg.dim(), division_degree(alg, false),
             std::nullopt};
  try {
    a.composition_dims = composition_series(generators, {options.seed, options.budget}).quotient_dims;
  } catch (const ChopIncomplete&) {
  }
  return a;
}

Json analyze_report_json(const ReportInput& input, const Analysis& analysis) {
  Json j = header("analyze", input);
  j["closure"] = closure_json(analysis.closure);
  Json tri;
  tri["status"] = to_string(analysis.triangularizable.status);
  tri["witness"] = analysis.triangularizable.witness
                       ? element_witness(analysis.closure, *analysis.triangularizable.witness,
                                         *analysis.triangularizable.char_poly)
                       : Json(nullptr);
  j["triangularizable"] = tri;
  j["irreducibility"] = to_json(analysis.irreducibility);
  j["algebra_dim"] = analysis.algebra_dim;
  j["division_degree"] = division_json(analysis.division);
  j["composition_dims"] = analysis.composition_dims ? Json(*analysis.composition_dims) : Json(nullptr);
  return j;
}

Json quat_report_json(std::span<const QuaternionMatrix> matrices, std::span<const NilpotentDecomposition> parts) {
  Json j;
  j["command"] = "quat-decompose";
  j["n"] = matrices.empty() ? 0 : matrices[0].rows();
  Json items = Json::array();
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    Json item;
    item["matrix"] = to_json(matrices[i]);
    item["scalar"] = parts[i].scalar.get_str();
    Json terms = Json::array();
    for (const auto& t : parts[i].terms) {
      Json term;
      term["coefficient"] = t.coefficient.get_str();
      term["nilpotent"] = to_json(t.n);
      terms.push_back(term);
    }
    item["terms"] = terms;
    items.push_back(item);
  }
  j["decompositions"] = items;
  return j;
}

// ----------------------------------------------------------------------------
// Verification

namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) result_.failures.push_back(what);
  }
  ReportCheck finish() {
    result_.ok = result_.failures.empty();
    return std::move(result_);
  }

 private:
  ReportCheck result_;
};

struct Inputs {
  Field field;
  std::optional<Field> subfield;
  std::size_t n;
  std::vector<Matrix> generators;
  CheckOptions options;
};

Inputs read_inputs(const Json& j) {
  Inputs in{Field::parse(j.at("field").get<std::string>()), std::nullopt, j.at("n").get<std::size_t>(), {}, {}};
  if (!j.at("subfield").is_null()) in.subfield = Field::parse(j["subfield"].get<std::string>());
  for (const auto& g : j.at("generators")) in.generators.push_back(matrix_from_json(g, in.field));
  const Json& o = j.at("options");
  in.options = {o.at("cap").get<std::size_t>(), o.at("seed").get<std::uint64_t>(), o.at("budget").get<std::size_t>()};
  if (in.generators.empty()) throw EmptyInput("report has no generators");
  for (const auto& g : in.generators)
    if (g.rows() != in.n || g.cols() != in.n) throw ShapeMismatch("generator shape disagrees with n");
  return in;
}

Status status_from_name(const std::string& name) {
  for (Status s : {Status::Holds, Status::Fails, Status::Unverified})
    if (to_string(s) == name) return s;
  throw ParseError("unknown status", name);
}

Matrix word_product(const std::vector<Matrix>& gens, const Json& word) {
  if (word.empty()) throw ParseError("empty word", "");
  Matrix m = gens.at(word[0].get<std::size_t>());
  for (std::size_t i = 1; i < word.size(); ++i) m = m * gens.at(word[i].get<std::size_t>());
  return m;
}

// The witness matrix is the product along its word and carries its char poly.
std::optional<Matrix> check_element_witness(Checker& check, const Inputs& in, const Json& w) {
  const Matrix m = matrix_from_json(w.at("matrix"), in.field);
  check.expect(word_product(in.generators, w.at("word")) == m, "witness matrix is not the product of its word");
  const Polynomial chi = polynomial_from_json(w.at("char_poly"), in.field);
  check.expect(char_poly(m) == chi, "witness char poly is wrong");
  return m;
}

void check_closure(Checker& check, const Json& j, const SemigroupClosure& s) {
  const Json& c = j.at("closure");
  check.expect(c.at("size").get<std::size_t>() == s.size(), "closure size differs on recomputation");
  check.expect(c.at("complete").get<bool>() == s.complete, "closure completeness differs on recomputation");
}

void check_verdict(Checker& check, const Inputs& in, const Json& jv, Irreducibility& status) {
  const IrreducibilityVerdict v = verdict_from_json(jv, in.field, in.n);
  status = v.status;
  check.expect(verify_verdict(in.generators, v), "irreducibility witness or certificate does not recheck");
}

Verdict verdict_from(Status hypotheses, Status conclusion) {
  if (hypotheses == Status::Fails) return Verdict::HypothesisFails;
  if (hypotheses == Status::Unverified || conclusion == Status::Unverified) return Verdict::Incomplete;
  return conclusion == Status::Holds ? Verdict::TheoremInstanceVerified : Verdict::CounterexampleCandidate;
}

ReportCheck verify_burnside(const Json& j) {
  Checker check;
  const Inputs in = read_inputs(j);
  const SemigroupClosure s = semigroup_closure(in.generators, in.options.cap);
  check_closure(check, j, s);

  const Json& h1 = j.at("hypotheses").at(0);
  const Status h1_status = status_from_name(h1.at("status").get<std::string>());
  if (h1_status == Status::Fails) {
    const auto m = check_element_witness(check, in, h1.at("witness"));
    check.expect(!is_triangularizable_single(*m), "witness element is triangularizable");
  } else {
    check.expect(all_elements_triangularizable(s).status == h1_status, "triangularizability status differs");
  }

  const Json& data = j.at("conclusion").at("data");
  Irreducibility irr{};
  check_verdict(check, in, data.at("irreducibility"), irr);
  const AlgebraBasis alg = algebra_closure(in.generators, true);
  const std::size_t dim = data.at("algebra_dim").get<std::size_t>();
  check.expect(alg.dim() == dim, "algebra dimension differs on recomputation");
  if (!data.at("division_degree").is_null()) {
    check.expect(division_degree(alg, false).r == data["division_degree"].at("r").get<std::size_t>(),
                 "division degree differs on recomputation");
  }

  Status conclusion = Status::Unverified;
  if (irr != Irreducibility::Inconclusive)
    conclusion = (irr == Irreducibility::Irreducible) == (dim == in.n * in.n) ? Status::Holds : Status::Fails;
  check.expect(to_string(conclusion) == j.at("conclusion").at("status").get<std::string>(),
               "conclusion status does not follow from its data");
  check.expect(to_string(verdict_from(h1_status, conclusion)) == j.at("verdict").get<std::string>(),
               "verdict does not follow from the statuses");
  return check.finish();
}

ReportCheck verify_descent(const Json& j) {
  Checker check;
  const Inputs in = read_inputs(j);
  if (!in.subfield) throw ParseError("descent report without subfield", "");
  const Field& f = *in.subfield;
  const SemigroupClosure s = semigroup_closure(in.generators, in.options.cap);
  check_closure(check, j, s);

  const Json& h1 = j.at("hypotheses").at(0);
  const Status spectra = status_from_name(h1.at("status").get<std::string>());
  if (spectra == Status::Fails) {
    const Json& w = h1.at("witness");
    const auto m = check_element_witness(check, in, w);
    if (w.at("eigenvalue").is_null()) {
      check.expect(!is_triangularizable_single(*m), "witness char poly splits");
    } else {
      const FieldElement lambda = in.field.parse_element(w["eigenvalue"].get<std::string>());
      check.expect(char_poly(*m)(lambda).is_zero(), "witness eigenvalue is not a root");
      check.expect(!lies_in_subfield(lambda, f), "witness eigenvalue lies in the subfield");
    }
  } else {
    check.expect(spectra_in_subfield(s, f).status == spectra, "spectra status differs");
  }

  const Json& h2 = j.at("hypotheses").at(1);
  Irreducibility irr{};
  check_verdict(check, in, h2.at("witness"), irr);
  const Status irr_status = irr == Irreducibility::Irreducible ? Status::Holds
                            : irr == Irreducibility::Reducible ? Status::Fails
                                                               : Status::Unverified;
  check.expect(to_string(irr_status) == h2.at("status").get<std::string>(), "irreducibility status mismatch");

  const Json& data = j.at("conclusion").at("data");
  const std::size_t n2 = in.n * in.n;
  const std::size_t dim_f = algebra_closure(in.generators, true, f).dim();
  const std::size_t dim_k = algebra_closure(in.generators, true).dim();
  check.expect(dim_f == data.at("dim_over_subfield").get<std::size_t>(), "dim over subfield differs");
  check.expect(dim_k == data.at("dim_over_field").get<std::size_t>(), "dim over field differs");
  const Status dim_status = dim_f == n2 && dim_k == n2 ? Status::Holds : Status::Fails;

  Status sim_status = status_from_name(data.at("similarity_status").get<std::string>());
  if (!data.at("similarity").is_null()) {
    const Matrix p = matrix_from_json(data["similarity"].at("p"), in.field);
    const bool invertible = p.rows() == in.n && p.cols() == in.n && rank(p) == in.n;
    bool into_f = invertible;
    if (invertible) {
      const Matrix p_inv = inverse(p);
      for (const auto& g : in.generators) {
        const Matrix c = p_inv * g * p;
        for (const auto& x : c.data()) into_f = into_f && lies_in_subfield(x, f);
      }
    }
    check.expect(into_f, "P does not conjugate the generators into the subfield");
    // P^{-1} Alg_F P lies in M_n(F) and has dimension n^2, so it is all of M_n(F).
    if (sim_status == Status::Holds) check.expect(into_f && dim_f == n2, "similarity claim does not recheck");
  } else {
    check.expect(sim_status != Status::Holds, "similarity claimed without P");
  }

  bool in_f = true;
  bool nonzero = false;
  for (const auto& m : s.elements) {
    const FieldElement t = trace(m);
    in_f = in_f && lies_in_subfield(t, f);
    nonzero = nonzero || !t.is_zero();
  }
  const Status trace_status = !in_f || !nonzero ? Status::Fails : s.complete ? Status::Holds : Status::Unverified;
  check.expect(to_string(trace_status) == data.at("trace_status").get<std::string>(), "trace status differs");

  Status conclusion = Status::Holds;
  for (Status part : {dim_status, sim_status, trace_status}) {
    if (part == Status::Fails) {
      conclusion = Status::Fails;
      break;
    }
    if (part == Status::Unverified) conclusion = Status::Unverified;
  }
  check.expect(to_string(conclusion) == j.at("conclusion").at("status").get<std::string>(),
               "conclusion status does not follow from its data");
  Status hypotheses = Status::Holds;
  for (Status part : {spectra, irr_status}) {
    if (part == Status::Fails) {
      hypotheses = Status::Fails;
      break;
    }
    if (part == Status::Unverified) hypotheses = Status::Unverified;
  }
  check.expect(to_string(verdict_from(hypotheses, conclusion)) == j.at("verdict").get<std::string>(),
               "verdict does not follow from the statuses");
  return check.finish();
}

ReportCheck verify_triangularize(const Json& j) {
  Checker check;
  const Inputs in = read_inputs(j);
  if (j.at("result").get<std::string>() == "Triangularized") {
    const Matrix p = matrix_from_json(j.at("p"), in.field);
    const bool invertible = p.rows() == in.n && p.cols() == in.n && rank(p) == in.n;
    check.expect(invertible, "P is not invertible");
    if (invertible) {
      const Matrix p_inv = inverse(p);
      const Json& conj = j.at("conjugated");
      check.expect(conj.size() == in.generators.size(), "wrong number of conjugated generators");
      for (std::size_t i = 0; i < in.generators.size() && i < conj.size(); ++i) {
        const Matrix c = matrix_from_json(conj[i], in.field);
        check.expect(p_inv * in.generators[i] * p == c, "conjugated generator does not match P^-1 G P");
        check.expect(is_upper_triangular(c), "conjugated generator is not upper triangular");
      }
    }
    return check.finish();
  }
  const Json& o = j.at("obstruction");
  if (o.at("kind").get<std::string>() == "NonSplitCharPoly") {
    const Matrix& g = in.generators.at(o.at("generator").get<std::size_t>());
    const Polynomial factor = polynomial_from_json(o.at("factor"), in.field);
    check.expect(factor.degree() >= 1 && (char_poly(g) % factor).is_zero(), "factor does not divide the char poly");
    check.expect(factor.degree() >= 1 && linear_part(factor.monic()).roots.empty(), "factor has a root");
  } else {
    check.expect(std::holds_alternative<NotTriangularizable>(triangularize_family(in.generators)),
                 "family triangularizes on recomputation");
  }
  return check.finish();
}

ReportCheck verify_chop(const Json& j) {
  Checker check;
  const Inputs in = read_inputs(j);
  std::vector<Subspace> subspaces;
  for (const auto& s : j.at("chain")) subspaces.push_back(subspace_from_json(s, in.field, in.n));
  const bool complete = j.at("complete").get<bool>();
  if (complete) {
    const InvariantChain chain = make_chain(in.generators, subspaces);
    check.expect(verify_chain(in.generators, chain), "chain is not an invariant chain");
    check.expect(chain.quotient_dims == j.at("quotient_dims").get<std::vector<std::size_t>>(),
                 "quotient dimensions differ");
    for (const auto& action : chain.quotient_actions) {
      const IrreducibilityVerdict v =
          find_invariant_subspace(action, {in.options.seed, in.options.budget, IrreducibilityEngine::Auto});
      check.expect(v.status == Irreducibility::Irreducible && verify_verdict(action, v),
                   "a composition factor is not certified irreducible");
    }
  } else {
    for (const auto& s : subspaces) check.expect(is_invariant(s, in.generators), "partial chain member not invariant");
    for (std::size_t i = 1; i < subspaces.size(); ++i)
      check.expect(subspaces[i].contains(subspaces[i - 1]) && subspaces[i].dim() > subspaces[i - 1].dim(),
                   "partial chain is not strictly increasing");
  }
  return check.finish();
}

ReportCheck verify_analyze(const Json& j) {
  Checker check;
  const Inputs in = read_inputs(j);
  const SemigroupClosure s = semigroup_closure(in.generators, in.options.cap);
  check_closure(check, j, s);
  Irreducibility irr{};
  check_verdict(check, in, j.at("irreducibility"), irr);
  const Json& tri = j.at("triangularizable");
  const Status status = status_from_name(tri.at("status").get<std::string>());
  if (status == Status::Fails) {
    const auto m = check_element_witness(check, in, tri.at("witness"));
    check.expect(!is_triangularizable_single(*m), "witness element is triangularizable");
  } else {
    check.expect(all_elements_triangularizable(s).status == status, "triangularizability status differs");
  }
  check.expect(algebra_closure(in.generators, true).dim() == j.at("algebra_dim").get<std::size_t>(),
               "algebra dimension differs on recomputation");
  return check.finish();
}

ReportCheck verify_quat(const Json& j) {
  Checker check;
  for (const auto& item : j.at("decompositions")) {
    const QuaternionMatrix x = quaternion_matrix_from_json(item.at("matrix"));
    NilpotentDecomposition d;
    d.scalar = mpq_class(item.at("scalar").get<std::string>());
    for (const auto& t : item.at("terms")) {
      d.terms.push_back({mpq_class(t.at("coefficient").get<std::string>()),
                         quaternion_matrix_from_json(t.at("nilpotent"))});
    }
    check.expect(verify_decomposition(x, d), "decomposition does not reconstruct with square-zero terms");
  }
  return check.finish();
}

}  // namespace

ReportCheck verify_report(const Json& report) {
  static const std::map<std::string, ReportCheck (*)(const Json&)> verifiers{
      {"burnside-check", verify_burnside}, {"descent-check", verify_descent}, {"triangularize", verify_triangularize},
      {"chop", verify_chop},               {"analyze", verify_analyze},      {"quat-decompose", verify_quat},
  };
  const std::string command = report.at("command").get<std::string>();
  const auto it = verifiers.find(command);
  if (it == verifiers.end()) throw ParseError("unknown report command", command);
  return it->second(report);
}

}  // namespace burnside
