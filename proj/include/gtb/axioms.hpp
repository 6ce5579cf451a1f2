#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gtb/bialgebra.hpp"

namespace gtb {

/// The two structure maps under test. Law checkers only see this bundle, so
/// any implementation (including deliberately broken ones) can be audited.
struct Operations {
  std::function<FormalSum(const CyclicWord&, const CyclicWord&)> bracket;
  std::function<Tensor2(const CyclicWord&)> cobracket;
};

Operations standard_operations(const SurfaceSymbol& O,
                               SignReading reading = SignReading::kCyclicOrder);

/// Wraps `ops` with result caches. The returned object is not thread-safe.
Operations memoized(Operations ops);

// Linear extensions through an Operations bundle.
FormalSum bracket(const Operations& ops, const FormalSum& x, const FormalSum& y);
Tensor2 cobracket(const Operations& ops, const FormalSum& x);
/// x·(y⊗z) = [x,y]⊗z + y⊗[x,z].
Tensor2 act(const Operations& ops, const CyclicWord& x, const Tensor2& t);
/// (id⊗δ)(t).
Tensor3 cobracket_right(const Operations& ops, const Tensor2& t);
/// [ , ] applied to every term of t.
FormalSum bracket_terms(const Operations& ops, const Tensor2& t);

/// Outcome of one law on one input tuple. `residual` is the formatted
/// left-minus-right side; holds ⟺ residual is the zero sum ("0").
struct LawReport {
  std::string law;
  bool holds = true;
  std::string residual = "0";
  std::string witness;
};

LawReport check_coskew(const CyclicWord& W, const Operations& ops);
LawReport check_co_jacobi(const CyclicWord& W, const Operations& ops);
/// Coskew symmetry and co-Jacobi; reports the first failing one.
LawReport check_coalgebra(const CyclicWord& W, const Operations& ops);
LawReport check_coalgebra(const CyclicWord& W, const SurfaceSymbol& O);

LawReport check_antisymmetry(const CyclicWord& U, const CyclicWord& V,
                             const Operations& ops);
LawReport check_jacobi(const CyclicWord& U, const CyclicWord& V, const CyclicWord& W,
                       const Operations& ops);
/// Antisymmetry of (U,V) and the Jacobi sum of (U,V,W).
LawReport check_algebra(const CyclicWord& U, const CyclicWord& V, const CyclicWord& W,
                        const Operations& ops);
LawReport check_algebra(const CyclicWord& U, const CyclicWord& V, const CyclicWord& W,
                        const SurfaceSymbol& O);

/// δ([V,W]) = V·δ(W) − W·δ(V).
LawReport check_compatibility(const CyclicWord& V, const CyclicWord& W,
                              const Operations& ops);
LawReport check_compatibility(const CyclicWord& V, const CyclicWord& W,
                              const SurfaceSymbol& O);

/// [ , ]∘δ(W) = 0.
LawReport check_involutive(const CyclicWord& W, const Operations& ops);
LawReport check_involutive(const CyclicWord& W, const SurfaceSymbol& O);

enum class Law { kCoskew, kCoJacobi, kAntisymmetry, kJacobi, kCompatibility, kInvolutive };

std::string_view law_name(Law law);
std::vector<Law> all_laws();
/// "all", "algebra", "coalgebra", "compat" or "involutive"; nullopt otherwise.
std::optional<std::vector<Law>> parse_law_group(std::string_view group);

/// Which tuples a corpus run evaluates.
///  - single-word laws: every corpus word;
///  - antisymmetry: every unordered pair of corpus words;
///  - compatibility: every unordered pair of words of length <= pair_exhaustive_length,
///    plus `pair_samples` seeded random pairs;
///  - Jacobi: every unordered triple of words of length <= triple_exhaustive_length,
///    plus `triple_samples` seeded random triples.
struct SuiteOptions {
  std::vector<Law> laws = all_laws();
  std::size_t pair_exhaustive_length = 3;
  std::size_t pair_samples = 400;
  std::size_t triple_exhaustive_length = 2;
  std::size_t triple_samples = 400;
  std::uint64_t seed = 1;
};

struct LawTally {
  Law law;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<LawReport> first_failure;
};

struct SuiteResult {
  std::vector<LawTally> tallies;
  bool all_hold() const;
};

SuiteResult run_law_suite(const std::vector<CyclicWord>& corpus, const Operations& ops,
                          const SuiteOptions& options = {});

}  // namespace gtb
