#include "gtb/axioms.hpp"

#include <map>
#include <memory>

#include "gtb/corpus.hpp"
#include "gtb/format.hpp"

namespace gtb {
namespace {

template <class T>
LawReport report(std::string law, const T& residual, std::string witness) {
  LawReport r;
  r.law = std::move(law);
  r.holds = residual.is_zero();
  r.residual = r.holds ? "0" : format(residual);
  r.witness = std::move(witness);
  return r;
}

std::string join(std::initializer_list<const CyclicWord*> words) {
  std::string out;
  for (const auto* w : words) {
    if (!out.empty()) out += ' ';
    out += w->text();
  }
  return out;
}

}  // namespace

Operations standard_operations(const SurfaceSymbol& O, SignReading reading) {
  return {
      [O, reading](const CyclicWord& v, const CyclicWord& w) {
        return bracket(v, w, O, reading);
      },
      [O, reading](const CyclicWord& w) { return cobracket(w, O, reading); },
  };
}

Operations memoized(Operations ops) {
  using BracketCache = std::map<std::pair<CyclicWord, CyclicWord>, FormalSum>;
  using CobracketCache = std::map<CyclicWord, Tensor2>;
  auto brackets = std::make_shared<BracketCache>();
  auto cobrackets = std::make_shared<CobracketCache>();
  return {
      [inner = ops.bracket, brackets](const CyclicWord& v, const CyclicWord& w) {
        auto key = std::make_pair(v, w);
        auto it = brackets->find(key);
        if (it == brackets->end()) it = brackets->emplace(key, inner(v, w)).first;
        return it->second;
      },
      [inner = ops.cobracket, cobrackets](const CyclicWord& w) {
        auto it = cobrackets->find(w);
        if (it == cobrackets->end()) it = cobrackets->emplace(w, inner(w)).first;
        return it->second;
      },
  };
}

FormalSum bracket(const Operations& ops, const FormalSum& x, const FormalSum& y) {
  FormalSum out;
  for (const auto& [v, a] : x) {
    for (const auto& [w, b] : y) out += (a * b) * ops.bracket(v, w);
  }
  return out;
}

Tensor2 cobracket(const Operations& ops, const FormalSum& x) {
  Tensor2 out;
  for (const auto& [w, c] : x) out += c * ops.cobracket(w);
  return out;
}

Tensor2 act(const Operations& ops, const CyclicWord& x, const Tensor2& t) {
  Tensor2 out;
  for (const auto& [k, c] : t) {
    for (const auto& [g, e] : ops.bracket(x, k.first)) out.add({g, k.second}, c * e);
    for (const auto& [g, e] : ops.bracket(x, k.second)) out.add({k.first, g}, c * e);
  }
  return out;
}

Tensor3 cobracket_right(const Operations& ops, const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t) {
    for (const auto& [inner, e] : ops.cobracket(k.second)) {
      out.add({k.first, inner.first, inner.second}, c * e);
    }
  }
  return out;
}

FormalSum bracket_terms(const Operations& ops, const Tensor2& t) {
  FormalSum out;
  for (const auto& [k, c] : t) out += c * ops.bracket(k.first, k.second);
  return out;
}

LawReport check_coskew(const CyclicWord& W, const Operations& ops) {
  const Tensor2 d = ops.cobracket(W);
  return report("coskew", swap(d) + d, W.text());
}

LawReport check_co_jacobi(const CyclicWord& W, const Operations& ops) {
  const Tensor3 nested = cobracket_right(ops, ops.cobracket(W));
  return report("co-jacobi", cyclic_symmetrize(nested), W.text());
}

LawReport check_coalgebra(const CyclicWord& W, const Operations& ops) {
  auto r = check_coskew(W, ops);
  if (!r.holds) return r;
  r = check_co_jacobi(W, ops);
  if (r.holds) r.law = "coalgebra";
  return r;
}

LawReport check_coalgebra(const CyclicWord& W, const SurfaceSymbol& O) {
  return check_coalgebra(W, standard_operations(O));
}

LawReport check_antisymmetry(const CyclicWord& U, const CyclicWord& V,
                             const Operations& ops) {
  return report("antisymmetry", ops.bracket(U, V) + ops.bracket(V, U), join({&U, &V}));
}

LawReport check_jacobi(const CyclicWord& U, const CyclicWord& V, const CyclicWord& W,
                       const Operations& ops) {
  const FormalSum u{U}, v{V}, w{W};
  FormalSum sum = bracket(ops, u, ops.bracket(V, W));
  sum += bracket(ops, v, ops.bracket(W, U));
  sum += bracket(ops, w, ops.bracket(U, V));
  return report("jacobi", sum, join({&U, &V, &W}));
}

LawReport check_algebra(const CyclicWord& U, const CyclicWord& V, const CyclicWord& W,
                        const Operations& ops) {
  auto r = check_antisymmetry(U, V, ops);
  if (!r.holds) return r;
  r = check_jacobi(U, V, W, ops);
  if (r.holds) r.law = "algebra";
  return r;
}

LawReport check_algebra(const CyclicWord& U, const CyclicWord& V, const CyclicWord& W,
                        const SurfaceSymbol& O) {
  return check_algebra(U, V, W, standard_operations(O));
}

LawReport check_compatibility(const CyclicWord& V, const CyclicWord& W,
                              const Operations& ops) {
  Tensor2 residual = cobracket(ops, ops.bracket(V, W));
  residual -= act(ops, V, ops.cobracket(W));
  residual += act(ops, W, ops.cobracket(V));
  return report("compatibility", residual, join({&V, &W}));
}

LawReport check_compatibility(const CyclicWord& V, const CyclicWord& W,
                              const SurfaceSymbol& O) {
  return check_compatibility(V, W, standard_operations(O));
}

LawReport check_involutive(const CyclicWord& W, const Operations& ops) {
  return report("involutive", bracket_terms(ops, ops.cobracket(W)), W.text());
}

LawReport check_involutive(const CyclicWord& W, const SurfaceSymbol& O) {
  return check_involutive(W, standard_operations(O));
}

std::string_view law_name(Law law) {
  switch (law) {
    case Law::kCoskew: return "coskew";
    case Law::kCoJacobi: return "co-jacobi";
    case Law::kAntisymmetry: return "antisymmetry";
    case Law::kJacobi: return "jacobi";
    case Law::kCompatibility: return "compatibility";
    case Law::kInvolutive: return "involutive";
  }
  return "unknown";
}

std::vector<Law> all_laws() {
  return {Law::kCoskew, Law::kCoJacobi, Law::kAntisymmetry,
          Law::kJacobi, Law::kCompatibility, Law::kInvolutive};
}

std::optional<std::vector<Law>> parse_law_group(std::string_view group) {
  if (group == "all") return all_laws();
  if (group == "algebra") return std::vector{Law::kAntisymmetry, Law::kJacobi};
  if (group == "coalgebra") return std::vector{Law::kCoskew, Law::kCoJacobi};
  if (group == "compat") return std::vector{Law::kCompatibility};
  if (group == "involutive") return std::vector{Law::kInvolutive};
  return std::nullopt;
}

bool SuiteResult::all_hold() const {
  for (const auto& t : tallies) {
    if (t.failed != 0) return false;
  }
  return true;
}

SuiteResult run_law_suite(const std::vector<CyclicWord>& corpus, const Operations& ops,
                          const SuiteOptions& options) {
  const Operations cached = memoized(ops);
  SuiteResult result;
  const std::size_t n = corpus.size();

  std::vector<std::size_t> short_pairs;
  std::vector<std::size_t> short_triples;
  for (std::size_t i = 0; i < n; ++i) {
    if (corpus[i].size() <= options.pair_exhaustive_length) short_pairs.push_back(i);
    if (corpus[i].size() <= options.triple_exhaustive_length) short_triples.push_back(i);
  }

  for (Law law : options.laws) {
    LawTally tally;
    tally.law = law;
    auto record = [&](LawReport r) {
      ++tally.checked;
      if (!r.holds) {
        ++tally.failed;
        if (!tally.first_failure) tally.first_failure = std::move(r);
      }
    };
    // Each law draws from its own stream so selecting laws does not change
    // which tuples the others see.
    Rng rng(options.seed ^ (0x9e37ull * (static_cast<std::uint64_t>(law) + 1)));

    switch (law) {
      case Law::kCoskew:
        for (const auto& w : corpus) record(check_coskew(w, cached));
        break;
      case Law::kCoJacobi:
        for (const auto& w : corpus) record(check_co_jacobi(w, cached));
        break;
      case Law::kInvolutive:
        for (const auto& w : corpus) record(check_involutive(w, cached));
        break;
      case Law::kAntisymmetry:
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i; j < n; ++j) {
            record(check_antisymmetry(corpus[i], corpus[j], cached));
          }
        }
        break;
      case Law::kCompatibility:
        for (std::size_t a = 0; a < short_pairs.size(); ++a) {
          for (std::size_t b = a; b < short_pairs.size(); ++b) {
            record(check_compatibility(corpus[short_pairs[a]], corpus[short_pairs[b]],
                                       cached));
          }
        }
        for (std::size_t s = 0; s < options.pair_samples && n > 0; ++s) {
          const auto i = rng.below(n);
          const auto j = rng.below(n);
          record(check_compatibility(corpus[i], corpus[j], cached));
        }
        break;
      case Law::kJacobi:
        for (std::size_t a = 0; a < short_triples.size(); ++a) {
          for (std::size_t b = a; b < short_triples.size(); ++b) {
            for (std::size_t c = b; c < short_triples.size(); ++c) {
              record(check_jacobi(corpus[short_triples[a]], corpus[short_triples[b]],
                                  corpus[short_triples[c]], cached));
            }
          }
        }
        for (std::size_t s = 0; s < options.triple_samples && n > 0; ++s) {
          const auto i = rng.below(n);
          const auto j = rng.below(n);
          const auto k = rng.below(n);
          record(check_jacobi(corpus[i], corpus[j], corpus[k], cached));
        }
        break;
    }
    result.tallies.push_back(std::move(tally));
  }
  return result;
}

}  // namespace gtb
