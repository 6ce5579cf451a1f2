#pragma once

#include <span>
#include <vector>

#include "gtb/words.hpp"

namespace gtb {

/// A reduced cyclic word using every letter of the n-alphabet exactly once.
/// It fixes the surface and the cyclic order used by every sign computation.
class SurfaceSymbol {
 public:
  /// Throws kNotASurfaceSymbol unless every letter appears exactly once and
  /// the word is cyclically reduced.
  static SurfaceSymbol validate(std::span<const Letter> word, Alphabet alphabet);
  static SurfaceSymbol parse(std::string_view text);

  const CyclicWord& word() const { return word_; }
  Alphabet alphabet() const { return {n_}; }
  int generators() const { return n_; }
  /// Cyclic position of x in the canonical representative.
  int position(Letter x) const { return positions_[static_cast<std::size_t>(x.rank())]; }

 private:
  SurfaceSymbol(CyclicWord word, int n, std::vector<int> positions)
      : word_(std::move(word)), n_(n), positions_(std::move(positions)) {}

  CyclicWord word_;
  int n_;
  std::vector<int> positions_;
};

enum class Orientation : int { kReversing = -1, kNone = 0, kPreserving = 1 };

constexpr int value(Orientation o) { return static_cast<int>(o); }

/// How a sign word is turned into a value.
///  - kCyclicOrder: only the cyclic order of the (distinct) letters in the
///    surface symbol matters.
///  - kLiteral: the sign word must additionally be cyclically reduced as a
///    word, otherwise it evaluates to 0.
enum class SignReading { kCyclicOrder, kLiteral };

/// Cyclic order of the letters of `word` (read cyclically) inside O:
/// +1 for an order-preserving injection, -1 for order-reversing, 0 when a
/// letter repeats or the order is neither. Requires at least 3 letters.
Orientation cyclic_order(std::span<const Letter> word, const SurfaceSymbol& O);

/// The orientation map o(.): as cyclic_order, and 0 whenever `word` is not
/// cyclically reduced. Throws kUnsupportedLength below 3 letters.
Orientation orientation(std::span<const Letter> word, const SurfaceSymbol& O);

/// Evaluates a sign word under the given reading.
Orientation evaluate(std::span<const Letter> word, const SurfaceSymbol& O,
                     SignReading reading);

enum class PairKind { kType1 = 1, kType2 = 2, kType3 = 3 };

/// The word whose orientation gives sign(P,Q) for a pair of the given kind:
/// type 1 p̄1 q̄1 p2 q2, type 2 p̄1 q̄1 x1, type 3 q2 p̄1 x1.
LinearWord sign_word(PairKind kind, std::span<const Letter> P,
                     std::span<const Letter> Q);

int sign(PairKind kind, std::span<const Letter> P, std::span<const Letter> Q,
         const SurfaceSymbol& O, SignReading reading = SignReading::kCyclicOrder);

/// 1 - n for the surface with boundary glued from the 4n-gon.
int euler_characteristic(const SurfaceSymbol& O);
/// 1 - n for a surface on n generators.
int euler_characteristic(int generators);

}  // namespace gtb
