#include "gtb/words.hpp"

#include <algorithm>
#include <cctype>

namespace gtb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidLetter: return "InvalidLetter";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kInvalidExponent: return "InvalidExponent";
    case ErrorKind::kInvalidOccurrence: return "InvalidOccurrence";
    case ErrorKind::kNotASurfaceSymbol: return "NotASurfaceSymbol";
    case ErrorKind::kUnsupportedLength: return "UnsupportedLength";
    case ErrorKind::kInvalidPair: return "InvalidPair";
    case ErrorKind::kIncompleteTable: return "IncompleteTable";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    out.push_back({i, false});
    out.push_back({i, true});
  }
  return out;
}

LinearWord parse_word(std::string_view text, Alphabet alphabet) {
  LinearWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char head = text[pos];
    if (head != 'a' && head != 'A') {
      throw Error(ErrorKind::kParseError,
                  "expected 'a' or 'A' at offset " + std::to_string(pos) +
                      " in \"" + std::string(text) + "\"");
    }
    ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == digits) {
      throw Error(ErrorKind::kParseError,
                  "missing generator index in \"" + std::string(text) + "\"");
    }
    // Leading zeros are outside the grammar; "a0" is a letter-range error.
    if (text[digits] == '0' && pos - digits > 1) {
      throw Error(ErrorKind::kParseError,
                  "leading zero in \"" + std::string(text) + "\"");
    }
    if (pos - digits > 9) {
      throw Error(ErrorKind::kInvalidLetter,
                  "generator index too large in \"" + std::string(text) + "\"");
    }
    const int index = std::stoi(std::string(text.substr(digits, pos - digits)));
    const Letter x{index, head == 'A'};
    if (!alphabet.contains(x)) {
      throw Error(ErrorKind::kInvalidLetter,
                  to_string(x) + " is not in the " + std::to_string(alphabet.n) +
                      "-alphabet");
    }
    out.push_back(x);
  }
  return out;
}

std::string to_string(Letter x) {
  return (x.barred ? "A" : "a") + std::to_string(x.index);
}

std::string to_string(std::span<const Letter> word) {
  std::string out;
  for (Letter x : word) out += to_string(x);
  return out;
}

LinearWord bar(std::span<const Letter> word) {
  LinearWord out(word.rbegin(), word.rend());
  for (Letter& x : out) x = x.inverse();
  return out;
}

bool is_freely_reduced(std::span<const Letter> word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i + 1] == word[i].inverse()) return false;
  }
  return true;
}

bool is_cyclically_reduced(std::span<const Letter> word) {
  if (!is_freely_reduced(word)) return false;
  return word.size() < 2 || word.back() != word.front().inverse();
}

LinearWord free_reduce(std::span<const Letter> word) {
  LinearWord out;
  out.reserve(word.size());
  for (Letter x : word) {
    if (!out.empty() && out.back() == x.inverse()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = s[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

std::optional<CyclicWord> CyclicWord::from_linear(std::span<const Letter> word) {
  LinearWord reduced = free_reduce(word);
  // A freely reduced word only needs its ends trimmed pairwise.
  std::size_t lo = 0;
  std::size_t hi = reduced.size();
  while (hi - lo >= 2 && reduced[hi - 1] == reduced[lo].inverse()) {
    ++lo;
    --hi;
  }
  if (lo == hi) return std::nullopt;
  LinearWord core(reduced.begin() + static_cast<std::ptrdiff_t>(lo),
                  reduced.begin() + static_cast<std::ptrdiff_t>(hi));
  std::rotate(core.begin(),
              core.begin() + static_cast<std::ptrdiff_t>(least_rotation(core)),
              core.end());
  return CyclicWord(std::move(core));
}

CyclicWord CyclicWord::parse(std::string_view text, Alphabet alphabet) {
  auto w = from_linear(parse_word(text, alphabet));
  if (!w) {
    throw Error(ErrorKind::kParseError,
                "\"" + std::string(text) + "\" reduces to the empty word");
  }
  return *w;
}

LinearWord CyclicWord::rotation(std::size_t start) const {
  LinearWord out(canonical_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(start + i);
  return out;
}

std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
  return std::lexicographical_compare_three_way(
      a.canonical_.begin(), a.canonical_.end(), b.canonical_.begin(),
      b.canonical_.end());
}

std::optional<CyclicWord> cyclic_reduce_canonicalize(
    std::span<const Letter> word) {
  return CyclicWord::from_linear(word);
}

CyclicWord bar(const CyclicWord& word) {
  return *CyclicWord::from_linear(bar(std::span<const Letter>(word.letters())));
}

LinearWord power(const CyclicWord& word, int m) {
  if (m < 1) {
    throw Error(ErrorKind::kInvalidExponent,
                "power exponent must be >= 1, got " + std::to_string(m));
  }
  LinearWord out;
  out.reserve(word.size() * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    out.insert(out.end(), word.letters().begin(), word.letters().end());
  }
  return out;
}

Period smallest_period(const CyclicWord& word) {
  const auto& s = word.letters();
  const std::size_t n = s.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = s[i] == s[i - d];
    if (periodic) {
      auto root = CyclicWord::from_linear(std::span(s).first(d));
      return {*root, static_cast<int>(n / d)};
    }
  }
  return {word, 1};
}

bool is_primitive(const CyclicWord& word) {
  return smallest_period(word).exponent == 1;
}

LinearWord window(const CyclicWord& word, Occurrence occ) {
  if (occ.start >= word.size()) {
    throw Error(ErrorKind::kInvalidOccurrence,
                "start " + std::to_string(occ.start) +
                    " outside a word of length " + std::to_string(word.size()));
  }
  if (occ.length < 1) {
    throw Error(ErrorKind::kInvalidOccurrence, "occurrence length must be >= 1");
  }
  LinearWord out(occ.length);
  for (std::size_t i = 0; i < occ.length; ++i) out[i] = word.at(occ.start + i);
  return out;
}

}  // namespace gtb

std::size_t std::hash<gtb::CyclicWord>::operator()(
    const gtb::CyclicWord& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (gtb::Letter x : w.letters()) {
    h ^= static_cast<std::size_t>(x.rank()) + 1;
    h *= 1099511628211ull;
  }
  return h;
}
