#pragma once

#include <cstdint>
#include <vector>

#include "gtb/words.hpp"

namespace gtb {

/// SplitMix64. Used instead of <random> distributions so that sampled
/// corpora are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Every reduced cyclic word of length 1..max_length, sorted by (length, word).
std::vector<CyclicWord> all_reduced_cyclic_words(Alphabet alphabet,
                                                 std::size_t max_length);

/// Exhaustive words of length <= min(max_length, 4), followed (when
/// max_length > 4) by up to `count` distinct seeded samples of lengths
/// 5..max_length. Deterministic in (alphabet, max_length, count, seed).
std::vector<CyclicWord> corpus(Alphabet alphabet, std::size_t max_length,
                               std::size_t count, std::uint64_t seed);

/// One uniformly built random reduced cyclic word of exactly `length` letters.
CyclicWord random_reduced_cyclic_word(Alphabet alphabet, std::size_t length, Rng& rng);

}  // namespace gtb
