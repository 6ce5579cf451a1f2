#pragma once

// Brute-force reference implementations. Deliberately share no code with the
// library: words are vectors of signed ints (+k = a_k, -k = A_k) and every
// operation is the most literal loop available.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

Word parse(std::string_view text);
std::string text(const Word& w);

bool linear_reduced(const Word& w);
bool cyclic_reduced(const Word& w);
/// Free reduction followed by cancelling the ends; may return empty.
Word reduce(const Word& w);
/// Minimum over all rotations, compared letter by letter.
Word canonical(const Word& w);
Word inverse(const Word& w);
Word window(const Word& w, std::size_t start, std::size_t length);

/// o of the cyclic word w: searched over every rotation of w and of its
/// reverse for a strictly increasing run of positions in O.
int orientation(const Word& w, const Word& O, bool literal);

struct Link {
  int kind;
  int sign;
};
std::optional<Link> linked(const Word& P, const Word& Q, const Word& O, bool literal);

/// (p.start, p.length, q.start, q.length, kind, sign)
using PairRecord = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, int, int>;

std::set<PairRecord> lp1(const Word& W, const Word& O, bool literal);
/// Occurrences in V^j and W^k for j <= cap_v, k <= cap_w.
std::set<PairRecord> lp2(const Word& V, const Word& W, const Word& O, bool literal,
                         int cap_v, int cap_w);
/// floor(2 + other/own)
int cap(std::size_t own, std::size_t other);

/// Cut of W by a self pair, straight from the definition. Both results are
/// canonical; `raw` receives the two linear pieces before canonicalization.
std::pair<Word, Word> delta(const Word& W, const PairRecord& r,
                            std::pair<Word, Word>* raw = nullptr);
/// Crossing word of a pair of (V, W). When Y is shorter than both words the
/// pieces are cut out as defined; otherwise the overlap is cancelled by
/// reduction. `raw` receives the uncanonicalized concatenation.
Word gamma(const Word& V, const Word& W, const PairRecord& r, Word* raw = nullptr);

/// Sums keyed by canonical text.
using Sum = std::set<std::pair<std::string, long>>;
using Sum2 = std::set<std::tuple<std::string, std::string, long>>;
Sum bracket(const Word& V, const Word& W, const Word& O, bool literal);
Sum2 cobracket(const Word& W, const Word& O, bool literal);

/// Every canonical cyclically reduced word over n generators, length 1..max.
std::vector<Word> all_words(int n, std::size_t max_length);

}  // namespace oracle
