#ifndef BURNSIDE_BURNSIDE_HPP
#define BURNSIDE_BURNSIDE_HPP

// Semigroup closures and the theorem-level checkers built on them.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/linalg.hpp"
#include "burnside/modstruct.hpp"
#include "burnside/polynomial.hpp"

namespace burnside {

struct SemigroupClosure {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<Matrix> generators;
  /// Duplicate-free, in breadth-first discovery order.
  std::vector<Matrix> elements;
  /// words[i] lists generator indices whose product, left to right, is elements[i].
  std::vector<std::vector<std::size_t>> words;
  /// right_table[i][g] is the index of elements[i] * generators[g], or npos
  /// when the closure stopped before computing it.
  std::vector<std::vector<std::size_t>> right_table;
  bool complete = false;
  std::size_t cap = 0;
  /// Pairs (x, y) whose product was located through the table (all pairs
  /// when complete).
  std::size_t pairs_checked = 0;
  /// Pairs whose product was also recomputed by direct multiplication.
  std::size_t direct_pairs_checked = 0;

  std::size_t size() const { return elements.size(); }
};

constexpr std::size_t kDefaultCap = 10000;

/// Breadth-first multiplicative closure; complete = false when more than
/// `cap` elements would be needed. For complete closures every product x*y
/// is located by walking y's word through the table, and products are also
/// recomputed directly: on all pairs up to `pair_check_limit` elements, on a
/// fixed pseudo-random sample of 4096 pairs beyond. Throws
/// PreconditionViolated when cap < |generators|.
SemigroupClosure semigroup_closure(std::span<const Matrix> generators, std::size_t cap = kDefaultCap,
                                   std::size_t pair_check_limit = 512);

enum class Status { Holds, Fails, Unverified };
std::string to_string(Status status);

struct TriangularizabilityCheck {
  Status status;
  std::optional<std::size_t> witness;
  std::optional<Polynomial> char_poly;
};

/// Holds iff the closure is complete and every element's char poly splits.
TriangularizabilityCheck all_elements_triangularizable(const SemigroupClosure& closure);

struct SpectraCheck {
  Status status;
  std::optional<std::size_t> witness;
  std::optional<Polynomial> char_poly;
  /// A root outside the subfield, when the char poly splits over K.
  std::optional<FieldElement> eigenvalue;
};

/// Every element's char poly splits over K with all roots in the subfield F.
SpectraCheck spectra_in_subfield(const SemigroupClosure& closure, const Field& subfield);

enum class Verdict { TheoremInstanceVerified, HypothesisFails, CounterexampleCandidate, Incomplete };
std::string to_string(Verdict verdict);

struct CheckOptions {
  std::size_t cap = kDefaultCap;
  std::uint64_t seed = 0;
  std::size_t budget = 64;
};

/// Irreducible iff absolutely irreducible, for semigroups of triangularizable matrices.
struct BurnsideReport {
  Field field;
  std::size_t n;
  SemigroupClosure closure;
  TriangularizabilityCheck triangularizable;
  IrreducibilityVerdict irreducibility;
  std::size_t algebra_dim;
  std::optional<DivisionDegree> division;
  /// Set when the division-degree structure check failed on an irreducible family.
  std::optional<std::string> structure_violation;
  Status conclusion;
  Verdict verdict;
};

BurnsideReport check_burnside_general_field(std::span<const Matrix> generators, const CheckOptions& options = {});

/// Descent of an irreducible semigroup in M_n(K) with spectra in F to M_n(F).
struct DescentReport {
  Field field;
  Field subfield;
  std::size_t n;
  SemigroupClosure closure;
  SpectraCheck spectra;
  IrreducibilityVerdict irreducibility;
  std::size_t dim_over_subfield;
  std::size_t dim_over_field;
  std::optional<SimilarityToFull> similarity;
  std::optional<std::string> similarity_failure;
  bool traces_in_subfield;
  bool traces_nonzero;
  Status irreducible_status;
  Status dimension_status;
  Status similarity_status;
  Status trace_status;
  Status conclusion;
  Verdict verdict;
};

DescentReport check_spectra_descent(std::span<const Matrix> generators, const Field& subfield,
                                    const CheckOptions& options = {});

}  // namespace burnside

#endif  // BURNSIDE_BURNSIDE_HPP
