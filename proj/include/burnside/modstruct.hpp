#ifndef BURNSIDE_MODSTRUCT_HPP
#define BURNSIDE_MODSTRUCT_HPP

// Invariant subspaces of F^n under a family of matrices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/linalg.hpp"
#include "burnside/polynomial.hpp"

namespace burnside {

/// Smallest subspace containing v and invariant under every generator.
/// Throws ZeroVector for v = 0.
Subspace spin(std::span<const FieldElement> v, std::span<const Matrix> generators);

/// Every generator maps the subspace into itself.
bool is_invariant(const Subspace& s, std::span<const Matrix> generators);

enum class Irreducibility { Irreducible, Reducible, Inconclusive };
enum class IrreducibilityEngine { Auto, Norton, Exhaustive };

std::string to_string(Irreducibility status);

struct NortonCertificate {
  enum class Kind {
    // nullity of p(B) equals deg p: one vector on each side suffices.
    NullityEqualsDegree,
    // every line of ker p(B) and of ker p(B)^T spins to the whole space.
    KernelEnumerated,
    // no proper invariant subspace among all echelon-form subspaces.
    Exhaustive,
    // n = 1.
    Trivial,
  };
  Kind kind;
  std::optional<Matrix> element;
  std::optional<Polynomial> factor;
  std::optional<Vector> kernel_vector;
  std::optional<Vector> dual_vector;
};

std::string to_string(NortonCertificate::Kind kind);

struct IrreducibilityVerdict {
  Irreducibility status;
  /// Proper nonzero invariant subspace when Reducible.
  std::optional<Subspace> witness;
  /// Replayable certificate when Irreducible.
  std::optional<NortonCertificate> certificate;
  /// Candidate elements examined by the Norton engine.
  std::size_t rounds = 0;
};

struct IrreducibilityOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 64;
  IrreducibilityEngine engine = IrreducibilityEngine::Auto;
};

/// Norton-style irreducibility test with an exhaustive fallback over small
/// finite fields (Auto), or either engine alone.
IrreducibilityVerdict find_invariant_subspace(std::span<const Matrix> generators,
                                              const IrreducibilityOptions& options = {});

/// Whether all echelon-form proper subspaces of F^n can be enumerated within
/// the size limit (each Gaussian binomial at most 2^20).
bool exhaustive_search_feasible(const Field& field, std::size_t n);

/// Least (by dimension, then canonical order) proper nonzero invariant
/// subspace, by enumeration. Throws PreconditionViolated when infeasible.
std::optional<Subspace> exhaustive_invariant_subspace(std::span<const Matrix> generators);

/// Re-derives an Irreducible certificate from scratch.
bool replay_certificate(std::span<const Matrix> generators, const NortonCertificate& certificate);

/// Rechecks a verdict: witness invariance and properness, or certificate replay.
bool verify_verdict(std::span<const Matrix> generators, const IrreducibilityVerdict& verdict);

/// 0 = V_0 < V_1 < ... < V_t = F^n, every V_i invariant.
struct InvariantChain {
  std::size_t n = 0;
  std::vector<Subspace> subspaces;
  std::vector<std::size_t> quotient_dims;
  /// Induced action of each generator on V_i / V_{i-1}, one family per step.
  std::vector<std::vector<Matrix>> quotient_actions;
  /// Bases of V_i / V_{i-1} lifted to F^n, used for the induced actions.
  std::vector<std::vector<Vector>> quotient_bases;

  std::size_t length() const { return quotient_dims.size(); }
  bool is_maximal() const;
};

/// Rebuilds dims, bases and actions for a chain given by its subspaces.
InvariantChain make_chain(std::span<const Matrix> generators, std::vector<Subspace> subspaces);

/// Rechecks strictness, endpoints and invariance.
bool verify_chain(std::span<const Matrix> generators, const InvariantChain& chain);

class ChopIncomplete : public Error {
 public:
  ChopIncomplete(const std::string& message, InvariantChain partial)
      : Error(message), partial_(std::move(partial)) {}
  const InvariantChain& partial() const { return partial_; }

 private:
  InvariantChain partial_;
};

/// Composition series by recursive chop; throws ChopIncomplete when the
/// irreducibility engine cannot decide a factor.
InvariantChain composition_series(std::span<const Matrix> generators, const IrreducibilityOptions& options = {});

struct Triangularization {
  InvariantChain chain;
  Matrix p;
  /// P^{-1} G P for every generator G, all upper triangular.
  std::vector<Matrix> conjugated;
};

struct NotTriangularizable {
  enum class Kind { NonSplitCharPoly, NoCommonEigenvector };
  Kind kind = Kind::NoCommonEigenvector;
  /// Offending generator (NonSplitCharPoly).
  std::size_t generator = 0;
  /// A factor without roots in the field (NonSplitCharPoly).
  std::optional<Polynomial> factor;
  /// Recursion depth and quotient dimension of the failing node (NoCommonEigenvector).
  std::size_t depth = 0;
  std::size_t ambient_dim = 0;

  std::string describe() const;
};

std::variant<Triangularization, NotTriangularizable> triangularize_family(std::span<const Matrix> generators);

/// Induced action on a quotient V/W: `complement` lifts a basis of V/W.
std::vector<Matrix> induced_quotient_action(std::span<const Matrix> generators, const Subspace& w,
                                            std::span<const Vector> complement);
/// Action on an invariant subspace in its canonical basis.
std::vector<Matrix> restricted_action(std::span<const Matrix> generators, const Subspace& w);

}  // namespace burnside

#endif  // BURNSIDE_MODSTRUCT_HPP
