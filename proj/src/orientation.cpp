#include "gtb/orientation.hpp"

#include <algorithm>

namespace gtb {

SurfaceSymbol SurfaceSymbol::validate(std::span<const Letter> word,
                                      Alphabet alphabet) {
  const std::size_t expected = 2 * static_cast<std::size_t>(alphabet.n);
  if (word.size() != expected) {
    throw Error(ErrorKind::kNotASurfaceSymbol,
                to_string(word) + " has length " + std::to_string(word.size()) +
                    ", expected " + std::to_string(expected));
  }
  std::vector<int> positions(expected, -1);
  for (Letter x : word) {
    if (!alphabet.contains(x)) {
      throw Error(ErrorKind::kNotASurfaceSymbol,
                  to_string(x) + " is outside the alphabet");
    }
    auto& slot = positions[static_cast<std::size_t>(x.rank())];
    if (slot != -1) {
      throw Error(ErrorKind::kNotASurfaceSymbol,
                  to_string(x) + " appears more than once in " + to_string(word));
    }
    slot = 0;
  }
  if (!is_cyclically_reduced(word)) {
    throw Error(ErrorKind::kNotASurfaceSymbol,
                to_string(word) + " is not cyclically reduced");
  }
  auto canonical = *CyclicWord::from_linear(word);
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    positions[static_cast<std::size_t>(canonical.letters()[i].rank())] =
        static_cast<int>(i);
  }
  return SurfaceSymbol(std::move(canonical), alphabet.n, std::move(positions));
}

SurfaceSymbol SurfaceSymbol::parse(std::string_view text) {
  // The alphabet size is read off the symbol itself: it has 2n letters.
  int max_index = 0;
  const auto loose = parse_word(text, Alphabet{1 << 20});
  for (Letter x : loose) max_index = std::max(max_index, x.index);
  if (loose.empty() || static_cast<int>(loose.size()) != 2 * max_index) {
    throw Error(ErrorKind::kNotASurfaceSymbol,
                "\"" + std::string(text) + "\" does not use 2n letters of an n-alphabet");
  }
  return validate(loose, Alphabet{max_index});
}

Orientation cyclic_order(std::span<const Letter> word, const SurfaceSymbol& O) {
  const std::size_t k = word.size();
  std::vector<int> pos(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!O.alphabet().contains(word[i])) return Orientation::kNone;
    pos[i] = O.position(word[i]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (pos[i] == pos[j]) return Orientation::kNone;
    }
  }
  // Distinct positions read cyclically: one descent means a single ascending
  // run (preserving), one ascent a single descending run (reversing).
  std::size_t descents = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (pos[(i + 1) % k] < pos[i]) ++descents;
  }
  if (descents == 1) return Orientation::kPreserving;
  if (descents == k - 1) return Orientation::kReversing;
  return Orientation::kNone;
}

Orientation orientation(std::span<const Letter> word, const SurfaceSymbol& O) {
  if (word.size() < 3) {
    throw Error(ErrorKind::kUnsupportedLength,
                "orientation is only defined on words of length >= 3, got " +
                    to_string(word));
  }
  if (!is_cyclically_reduced(word)) return Orientation::kNone;
  return cyclic_order(word, O);
}

Orientation evaluate(std::span<const Letter> word, const SurfaceSymbol& O,
                     SignReading reading) {
  if (reading == SignReading::kLiteral) return orientation(word, O);
  if (word.size() < 3) {
    throw Error(ErrorKind::kUnsupportedLength,
                "sign words have length 3 or 4, got " + to_string(word));
  }
  return cyclic_order(word, O);
}

LinearWord sign_word(PairKind kind, std::span<const Letter> P,
                     std::span<const Letter> Q) {
  const Letter p1 = P.front();
  const Letter p2 = P.back();
  const Letter q1 = Q.front();
  const Letter q2 = Q.back();
  switch (kind) {
    case PairKind::kType1:
      return {p1.inverse(), q1.inverse(), p2, q2};
    case PairKind::kType2:
      return {p1.inverse(), q1.inverse(), P[1]};
    case PairKind::kType3:
      return {q2, p1.inverse(), P[1]};
  }
  return {};
}

int sign(PairKind kind, std::span<const Letter> P, std::span<const Letter> Q,
         const SurfaceSymbol& O, SignReading reading) {
  return value(evaluate(sign_word(kind, P, Q), O, reading));
}

int euler_characteristic(int generators) { return 1 - generators; }

int euler_characteristic(const SurfaceSymbol& O) { return euler_characteristic(O.generators()); }

}  // namespace gtb
