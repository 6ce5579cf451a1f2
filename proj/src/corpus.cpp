#include "gtb/corpus.hpp"

#include <algorithm>
#include <set>

namespace gtb {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

namespace {

void extend(const std::vector<Letter>& letters, std::size_t length, LinearWord& prefix,
            std::vector<CyclicWord>& out) {
  if (prefix.size() == length) {
    if (!is_cyclically_reduced(prefix)) return;
    auto w = CyclicWord::from_linear(prefix);
    if (w->letters() == prefix) out.push_back(std::move(*w));
    return;
  }
  for (Letter x : letters) {
    if (!prefix.empty() && prefix.back() == x.inverse()) continue;
    prefix.push_back(x);
    extend(letters, length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CyclicWord> all_reduced_cyclic_words(Alphabet alphabet,
                                                 std::size_t max_length) {
  std::vector<CyclicWord> out;
  const auto letters = alphabet.letters();
  for (std::size_t len = 1; len <= max_length; ++len) {
    LinearWord prefix;
    // Canonical words are generated in lexicographic order within a length.
    extend(letters, len, prefix, out);
  }
  return out;
}

CyclicWord random_reduced_cyclic_word(Alphabet alphabet, std::size_t length, Rng& rng) {
  const auto letters = alphabet.letters();
  for (;;) {
    LinearWord w;
    w.reserve(length);
    while (w.size() < length) {
      const Letter x = letters[rng.below(letters.size())];
      if (!w.empty() && w.back() == x.inverse()) continue;
      w.push_back(x);
    }
    if (is_cyclically_reduced(w)) return *CyclicWord::from_linear(w);
  }
}

std::vector<CyclicWord> corpus(Alphabet alphabet, std::size_t max_length,
                               std::size_t count, std::uint64_t seed) {
  constexpr std::size_t kExhaustiveLength = 4;
  auto out = all_reduced_cyclic_words(alphabet, std::min(max_length, kExhaustiveLength));
  if (max_length <= kExhaustiveLength || count == 0) return out;

  Rng rng(seed);
  std::set<CyclicWord> seen;
  const std::size_t span = max_length - kExhaustiveLength;
  const std::size_t max_attempts = 64 * count;
  for (std::size_t attempt = 0; attempt < max_attempts && seen.size() < count; ++attempt) {
    const std::size_t len = kExhaustiveLength + 1 + rng.below(span);
    auto w = random_reduced_cyclic_word(alphabet, len, rng);
    if (seen.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace gtb
