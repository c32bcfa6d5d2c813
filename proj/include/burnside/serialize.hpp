#ifndef BURNSIDE_SERIALIZE_HPP
#define BURNSIDE_SERIALIZE_HPP

// Machine-readable report documents and their independent re-verification.
//
// Scalars are written as literals in the field's own syntax, matrices as
// arrays of rows, polynomials as coefficient arrays (lowest degree first).
// Key order is fixed, so equal inputs give byte-identical documents.

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "burnside/burnside.hpp"
#include "burnside/modstruct.hpp"
#include "burnside/quat.hpp"

namespace burnside {

using Json = nlohmann::ordered_json;

/// A spec string that Field::parse maps back to the same field, including
/// a non-canonical modulus when there is one.
std::string field_spec(const Field& field);

Json to_json(const Matrix& m);
Json to_json(std::span<const FieldElement> v);
Json to_json(const Polynomial& p);
Json to_json(const Subspace& s);
Json to_json(const IrreducibilityVerdict& verdict);
Json to_json(const QuaternionMatrix& x);

Matrix matrix_from_json(const Json& j, const Field& field);
Vector vector_from_json(const Json& j, const Field& field);
Polynomial polynomial_from_json(const Json& j, const Field& field);
Subspace subspace_from_json(const Json& j, const Field& field, std::size_t ambient);
IrreducibilityVerdict verdict_from_json(const Json& j, const Field& field, std::size_t n);
QuaternionMatrix quaternion_matrix_from_json(const Json& j);

/// Inputs and flags echoed into every report.
struct ReportInput {
  Field field;
  std::optional<Field> subfield;
  std::vector<Matrix> generators;
  CheckOptions options;
};

Json burnside_report_json(const ReportInput& input, const BurnsideReport& report);
Json descent_report_json(const ReportInput& input, const DescentReport& report);
Json triangularize_report_json(const ReportInput& input,
                               const std::variant<Triangularization, NotTriangularizable>& result);
/// `chain` is the full series, or the partial one when `error` is set.
Json chop_report_json(const ReportInput& input, const InvariantChain& chain, const std::optional<std::string>& error);

struct Analysis {
  SemigroupClosure closure;
  TriangularizabilityCheck triangularizable;
  IrreducibilityVerdict irreducibility;
  std::size_t algebra_dim;
  std::optional<DivisionDegree> division;
  std::optional<std::vector<std::size_t>> composition_dims;
};
Analysis analyze_family(std::span<const Matrix> generators, const CheckOptions& options);
Json analyze_report_json(const ReportInput& input, const Analysis& analysis);

Json quat_report_json(std::span<const QuaternionMatrix> matrices, std::span<const NilpotentDecomposition> parts);

struct ReportCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Rebuilds the inputs from the document and rechecks every claim that
/// carries a witness: products along words, char poly factors, invariant
/// subspaces, irreducibility certificates, similarity and triangularizing
/// matrices, chains, decompositions, and the verdict logic itself.
ReportCheck verify_report(const Json& report);

}  // namespace burnside

#endif  // BURNSIDE_SERIALIZE_HPP
