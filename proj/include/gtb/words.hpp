#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gtb {

/// Failure categories raised by the library. Every thrown gtb::Error carries
/// one of these so callers (the CLI in particular) can map them to messages.
enum class ErrorKind {
  kInvalidLetter,
  kParseError,
  kInvalidExponent,
  kInvalidOccurrence,
  kNotASurfaceSymbol,
  kUnsupportedLength,
  kInvalidPair,
  kIncompleteTable,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A letter of the n-alphabet: generator a_index, or its inverse when barred.
struct Letter {
  int index = 1;
  bool barred = false;

  constexpr Letter inverse() const { return {index, !barred}; }
  /// Position in the total order a1 < A1 < a2 < A2 < ...
  constexpr int rank() const { return 2 * (index - 1) + (barred ? 1 : 0); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.rank() <=> b.rank();
  }
};

struct Alphabet {
  int n = 1;

  bool contains(Letter x) const { return x.index >= 1 && x.index <= n; }
  /// All 2n letters in rank order.
  std::vector<Letter> letters() const;
};

using LinearWord = std::vector<Letter>;

/// Parses the ASCII grammar ([aA][1-9][0-9]*)*. No reduction is performed.
LinearWord parse_word(std::string_view text, Alphabet alphabet);
std::string to_string(std::span<const Letter> word);
std::string to_string(Letter x);

LinearWord bar(std::span<const Letter> word);
bool is_freely_reduced(std::span<const Letter> word);
/// Freely reduced and the last letter is not the inverse of the first.
bool is_cyclically_reduced(std::span<const Letter> word);
LinearWord free_reduce(std::span<const Letter> word);

/// Start index of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation(std::span<const Letter> word);

/// A non-empty reduced cyclic word, stored as its least rotation.
class CyclicWord {
 public:
  /// Reduces and canonicalizes; nullopt when everything cancels.
  static std::optional<CyclicWord> from_linear(std::span<const Letter> word);
  /// Shorthand for from_linear(parse_word(text)) that throws kParseError on
  /// an empty result.
  static CyclicWord parse(std::string_view text, Alphabet alphabet);

  std::size_t size() const { return canonical_.size(); }
  const LinearWord& letters() const { return canonical_; }
  /// Cyclic indexing into the canonical representative.
  Letter at(std::size_t i) const { return canonical_[i % canonical_.size()]; }
  /// Representative starting at position `start` of the canonical one.
  LinearWord rotation(std::size_t start) const;
  std::string text() const { return to_string(canonical_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& a,
                                          const CyclicWord& b);

 private:
  explicit CyclicWord(LinearWord canonical) : canonical_(std::move(canonical)) {}
  LinearWord canonical_;
};

std::optional<CyclicWord> cyclic_reduce_canonicalize(
    std::span<const Letter> word);

CyclicWord bar(const CyclicWord& word);

/// Canonical representative repeated m times.
LinearWord power(const CyclicWord& word, int m);

struct Period {
  CyclicWord root;
  int exponent;
};

/// word = root^exponent with exponent maximal.
Period smallest_period(const CyclicWord& word);
bool is_primitive(const CyclicWord& word);

/// A subword occurrence, positioned on the canonical representative and
/// read cyclically (it may wrap any number of times).
struct Occurrence {
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

LinearWord window(const CyclicWord& word, Occurrence occ);

}  // namespace gtb

template <>
struct std::hash<gtb::CyclicWord> {
  std::size_t operator()(const gtb::CyclicWord& w) const noexcept;
};
