#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gtb/orientation.hpp"
#include "gtb/words.hpp"

namespace gtb {

struct Linkage {
  PairKind kind;
  int sign;

  friend bool operator==(const Linkage&, const Linkage&) = default;
};

/// Decides whether the ordered pair (P, Q) of linear words is linked.
///
/// Both words must be freely reduced of length >= 2.
///  - type 1: l(P) = l(Q) = 2 and the sign word p̄1 q̄1 p2 q2 is nonzero;
///  - type 2: P = p1 Y p2, Q = q1 Y q2 with p1 != q1, p2 != q2 and
///    o(p̄1 q̄1 x1) = o(p2 q2 x̄2), where x1, x2 are the ends of Y;
///  - type 3: P = p1 Y p2, Q = q1 Ȳ q2 with p1 != q̄2, p2 != q̄1 and
///    o(q2 p̄1 x1) = o(q̄1 p2 x̄2).
/// The returned sign is the common orientation value. Under the literal
/// reading it may be 0.
std::optional<Linkage> is_linked(std::span<const Letter> P,
                                 std::span<const Letter> Q,
                                 const SurfaceSymbol& O,
                                 SignReading reading = SignReading::kCyclicOrder);

struct LinkedPair {
  Occurrence p;
  Occurrence q;
  PairKind kind = PairKind::kType1;
  int sign = 0;
  /// Power of the host word each occurrence lives in; (1, 1) within one word.
  int p_exponent = 1;
  int q_exponent = 1;

  friend bool operator==(const LinkedPair&, const LinkedPair&) = default;
};

struct Lp1Options {
  SignReading reading = SignReading::kCyclicOrder;
  /// Windows up to l(W^2) instead of l(W). Experimental; off by default.
  bool square_windows = false;
};

/// Linked pairs (P, Q) of occurrences inside one cyclic word, sorted by
/// (p, q).
std::vector<LinkedPair> enumerate_lp1(const CyclicWord& W, const SurfaceSymbol& O,
                                      const Lp1Options& options = {});

struct Lp2Options {
  SignReading reading = SignReading::kCyclicOrder;
  /// Added to both exponent caps. Used to probe that the caps are tight.
  int extra_exponent = 0;
};

/// floor(2 + other / own): the largest power of a word of length `own` that
/// a linked occurrence against a word of length `other` can need.
int exponent_cap(std::size_t own_length, std::size_t other_length);

/// Exponent needed to hold an occurrence of `length` letters in powers of a
/// word of `word_length` letters.
int exponent_for(std::size_t length, std::size_t word_length);

/// Linked pairs with P an occurrence in a power of V and Q one in a power
/// of W, sorted by (p, q).
std::vector<LinkedPair> enumerate_lp2(const CyclicWord& V, const CyclicWord& W,
                                      const SurfaceSymbol& O,
                                      const Lp2Options& options = {});

/// Re-derives the linkage of `pair` from its occurrences; nullopt if the
/// occurrences do not form a linked pair of the stated kind in (V, W).
std::optional<Linkage> relink(const CyclicWord& V, const CyclicWord& W,
                              const LinkedPair& pair, const SurfaceSymbol& O,
                              SignReading reading = SignReading::kCyclicOrder);

}  // namespace gtb
