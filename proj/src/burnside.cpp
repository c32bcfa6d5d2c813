#include "burnside/burnside.hpp"

#include <map>
#include <random>
#include <unordered_map>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

constexpr std::size_t kSampledPairs = 4096;

void check_generators(std::span<const Matrix> generators) {
  if (generators.empty()) throw EmptyInput("semigroup needs at least one generator");
  const Field f = field_of(generators[0]);
  const std::size_t n = generators[0].rows();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw ShapeMismatch("generators must be square of a common size");
    if (field_of(g) != f) throw MixedFieldError("generators over different fields");
  }
}

// Locates every product elements[x] * elements[y] by extending y's word one
// generator at a time: x * w(y) = (x * w(parent(y))) * g(y).
bool table_closes(const SemigroupClosure& s, const std::vector<std::size_t>& parent,
                  const std::vector<std::size_t>& last) {
  const std::size_t size = s.size();
  std::vector<std::size_t> prod(size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const std::size_t from = parent[y] == SemigroupClosure::npos ? x : prod[parent[y]];
      const std::size_t to = s.right_table[from][last[y]];
      if (to == SemigroupClosure::npos) return false;
      prod[y] = to;
    }
  }
  return true;
}

bool pair_in_closure(const SemigroupClosure& s, const std::unordered_map<Matrix, std::size_t, MatrixHash>& index,
                     std::size_t x, std::size_t y) {
  return index.contains(s.elements[x] * s.elements[y]);
}

}  // namespace

SemigroupClosure semigroup_closure(std::span<const Matrix> generators, std::size_t cap, std::size_t pair_check_limit) {
  check_generators(generators);
  if (cap < generators.size()) {
    throw PreconditionViolated("cap " + std::to_string(cap) + " is below the number of generators");
  }
  SemigroupClosure s;
  s.generators.assign(generators.begin(), generators.end());
  s.cap = cap;
  std::unordered_map<Matrix, std::size_t, MatrixHash> index;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> last;

  const auto add = [&](Matrix m, std::vector<std::size_t> word, std::size_t from, std::size_t g) {
    index.emplace(m, s.elements.size());
    s.elements.push_back(std::move(m));
    s.words.push_back(std::move(word));
    s.right_table.emplace_back(generators.size(), SemigroupClosure::npos);
    parent.push_back(from);
    last.push_back(g);
  };
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (!index.contains(generators[g])) add(generators[g], {g}, SemigroupClosure::npos, g);
  }

  bool truncated = false;
  for (std::size_t i = 0; i < s.elements.size() && !truncated; ++i) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      Matrix p = s.elements[i] * generators[g];
      if (auto it = index.find(p); it != index.end()) {
        s.right_table[i][g] = it->second;
        continue;
      }
      if (s.elements.size() == cap) {
        truncated = true;
        break;
      }
      std::vector<std::size_t> word = s.words[i];
      word.push_back(g);
      s.right_table[i][g] = s.elements.size();
      add(std::move(p), std::move(word), i, g);
    }
  }
  s.complete = !truncated;
  if (!s.complete) return s;

  if (!table_closes(s, parent, last)) throw StructureViolation("closure table does not close");
  const std::size_t size = s.size();
  s.pairs_checked = size * size;
  if (size <= pair_check_limit) {
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y)
        if (!pair_in_closure(s, index, x, y)) throw StructureViolation("closure misses a pairwise product");
    s.direct_pairs_checked = size * size;
  } else {
    std::mt19937_64 rng(size);
    for (std::size_t k = 0; k < kSampledPairs; ++k) {
      const std::size_t x = rng() % size;
      const std::size_t y = rng() % size;
      if (!pair_in_closure(s, index, x, y)) throw StructureViolation("closure misses a pairwise product");
    }
    s.direct_pairs_checked = kSampledPairs;
  }
  return s;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Holds:
      return "Holds";
    case Status::Fails:
      return "Fails";
    case Status::Unverified:
      return "Unverified";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::TheoremInstanceVerified:
      return "TheoremInstanceVerified";
    case Verdict::HypothesisFails:
      return "HypothesisFails";
    case Verdict::CounterexampleCandidate:
      return "CounterexampleCandidate";
    case Verdict::Incomplete:
      return "Incomplete";
  }
  return "?";
}

TriangularizabilityCheck all_elements_triangularizable(const SemigroupClosure& closure) {
  std::map<Polynomial, bool> splits;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    Polynomial chi = char_poly(closure.elements[i]);
    auto it = splits.find(chi);
    if (it == splits.end()) it = splits.emplace(chi, splits_with_roots(chi).splits).first;
    if (!it->second) return {Status::Fails, i, std::move(chi)};
  }
  return {closure.complete ? Status::Holds : Status::Unverified, std::nullopt, std::nullopt};
}

SpectraCheck spectra_in_subfield(const SemigroupClosure& closure, const Field& subfield) {
  struct Outcome {
    bool splits;
    std::optional<FieldElement> outside;
  };
  std::map<Polynomial, Outcome> seen;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    Polynomial chi = char_poly(closure.elements[i]);
    auto it = seen.find(chi);
    if (it == seen.end()) {
      const SplitResult split = splits_with_roots(chi);
      Outcome outcome{split.splits, std::nullopt};
      for (const auto& root : split.roots) {
        if (!lies_in_subfield(root, subfield)) {
          outcome.outside = root;
          break;
        }
      }
      it = seen.emplace(chi, outcome).first;
    }
    if (!it->second.splits || it->second.outside) return {Status::Fails, i, std::move(chi), it->second.outside};
  }
  return {closure.complete ? Status::Holds : Status::Unverified, std::nullopt, std::nullopt, std::nullopt};
}

BurnsideReport check_burnside_general_field(std::span<const Matrix> generators, const CheckOptions& options) {
  check_generators(generators);
  const Field f = field_of(generators[0]);
  const std::size_t n = generators[0].rows();
  SemigroupClosure closure = semigroup_closure(generators, options.cap);
  TriangularizabilityCheck tri = all_elements_triangularizable(closure);
  IrreducibilityVerdict irr = find_invariant_subspace(generators, {options.seed, options.budget});
  const AlgebraBasis alg = algebra_closure(generators, true);

  BurnsideReport report{f,   n, std::move(closure), std::move(tri), std::move(irr), alg.dim(), std::nullopt,
                        std::nullopt, Status::Unverified, Verdict::Incomplete};
  if (report.irreducibility.status == Irreducibility::Irreducible) {
    try {
      report.division = division_degree(alg, true);
    } catch (const StructureViolation& e) {
      report.structure_violation = e.what();
      report.division = division_degree(alg, false);
    }
  }
  if (report.irreducibility.status != Irreducibility::Inconclusive) {
    const bool irreducible = report.irreducibility.status == Irreducibility::Irreducible;
    report.conclusion = irreducible == (report.algebra_dim == n * n) ? Status::Holds : Status::Fails;
  }

  const Status h1 = report.triangularizable.status;
  if (h1 == Status::Fails) {
    report.verdict = Verdict::HypothesisFails;
  } else if (h1 == Status::Unverified || report.conclusion == Status::Unverified) {
    report.verdict = Verdict::Incomplete;
  } else {
    report.verdict = report.conclusion == Status::Holds ? Verdict::TheoremInstanceVerified
                                                        : Verdict::CounterexampleCandidate;
  }
  return report;
}

namespace {

bool conjugates_into_subfield(const AlgebraBasis& alg, const Matrix& p, const Field& subfield) {
  const Matrix p_inv = inverse(p);
  for (const auto& b : alg.basis()) {
    const Matrix c = p_inv * b * p;
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j)
        if (!lies_in_subfield(c(i, j), subfield)) return false;
  }
  return true;
}

Status combine(std::initializer_list<Status> parts) {
  Status out = Status::Holds;
  for (Status s : parts) {
    if (s == Status::Fails) return Status::Fails;
    if (s == Status::Unverified) out = Status::Unverified;
  }
  return out;
}

}  // namespace

DescentReport check_spectra_descent(std::span<const Matrix> generators, const Field& subfield,
                                    const CheckOptions& options) {
  check_generators(generators);
  const Field k = field_of(generators[0]);
  if (!is_supported_tower(subfield, k)) {
    throw UnsupportedTower(subfield.to_string() + " is not a supported subfield of " + k.to_string());
  }
  const std::size_t n = generators[0].rows();
  SemigroupClosure closure = semigroup_closure(generators, options.cap);
  SpectraCheck spectra = spectra_in_subfield(closure, subfield);
  IrreducibilityVerdict irr = find_invariant_subspace(generators, {options.seed, options.budget});
  const AlgebraBasis alg_f = algebra_closure(generators, true, subfield);
  const AlgebraBasis alg_k = algebra_closure(generators, true);

  bool in_subfield = true;
  bool nonzero = false;
  for (const auto& m : closure.elements) {
    const FieldElement t = trace(m);
    if (!lies_in_subfield(t, subfield)) in_subfield = false;
    if (!t.is_zero()) nonzero = true;
  }

  DescentReport report{k,
                       subfield,
                       n,
                       std::move(closure),
                       std::move(spectra),
                       std::move(irr),
                       alg_f.dim(),
                       alg_k.dim(),
                       std::nullopt,
                       std::nullopt,
                       in_subfield,
                       nonzero,
                       Status::Unverified,
                       Status::Unverified,
                       Status::Unverified,
                       Status::Unverified,
                       Status::Unverified,
                       Verdict::Incomplete};

  switch (report.irreducibility.status) {
    case Irreducibility::Irreducible:
      report.irreducible_status = Status::Holds;
      break;
    case Irreducibility::Reducible:
      report.irreducible_status = Status::Fails;
      break;
    case Irreducibility::Inconclusive:
      report.irreducible_status = Status::Unverified;
      break;
  }
  report.dimension_status =
      report.dim_over_subfield == n * n && report.dim_over_field == n * n ? Status::Holds : Status::Fails;

  if (report.dim_over_subfield != n * n) {
    report.similarity_status = Status::Fails;
    report.similarity_failure = "F-algebra closure has dimension " + std::to_string(report.dim_over_subfield);
  } else {
    try {
      SimilarityToFull sim = construct_similarity_to_full(alg_f, subfield, {options.seed});
      const bool ok = verify_similarity(alg_f, sim) && conjugates_into_subfield(alg_f, sim.p, subfield);
      report.similarity_status = ok ? Status::Holds : Status::Fails;
      if (!ok) report.similarity_failure = "similarity failed verification";
      report.similarity = std::move(sim);
    } catch (const SearchExhausted& e) {
      report.similarity_status = Status::Unverified;
      report.similarity_failure = e.what();
    } catch (const PreconditionViolated& e) {
      report.similarity_status = Status::Fails;
      report.similarity_failure = e.what();
    }
  }

  if (!in_subfield || !nonzero) {
    report.trace_status = Status::Fails;
  } else {
    report.trace_status = report.closure.complete ? Status::Holds : Status::Unverified;
  }
  report.conclusion = combine({report.dimension_status, report.similarity_status, report.trace_status});

  const Status hypotheses = combine({report.spectra.status, report.irreducible_status});
  if (hypotheses == Status::Fails) {
    report.verdict = Verdict::HypothesisFails;
  } else if (hypotheses == Status::Unverified || report.conclusion == Status::Unverified) {
    report.verdict = Verdict::Incomplete;
  } else {
    report.verdict = report.conclusion == Status::Holds ? Verdict::TheoremInstanceVerified
                                                        : Verdict::CounterexampleCandidate;
  }
  return report;
}

}  // namespace burnside
