#include "gtb/linked_pairs.hpp"

#include <algorithm>

namespace gtb {
namespace {

bool middles_equal(std::span<const Letter> P, std::span<const Letter> Q) {
  return std::equal(P.begin() + 1, P.end() - 1, Q.begin() + 1);
}

// Q's middle is the inverse of P's middle.
bool middles_inverse(std::span<const Letter> P, std::span<const Letter> Q) {
  const std::size_t m = P.size() - 2;
  for (std::size_t i = 0; i < m; ++i) {
    if (Q[1 + i] != P[m - i].inverse()) return false;
  }
  return true;
}

std::vector<LinearWord> windows_of_length(const CyclicWord& w, std::size_t m) {
  std::vector<LinearWord> out;
  out.reserve(w.size());
  for (std::size_t s = 0; s < w.size(); ++s) out.push_back(window(w, {s, m}));
  return out;
}

bool by_occurrences(const LinkedPair& a, const LinkedPair& b) {
  if (a.p != b.p) return a.p < b.p;
  return a.q < b.q;
}

}  // namespace

std::optional<Linkage> is_linked(std::span<const Letter> P,
                                 std::span<const Letter> Q,
                                 const SurfaceSymbol& O, SignReading reading) {
  if (P.size() < 2 || P.size() != Q.size()) return std::nullopt;
  if (!is_freely_reduced(P) || !is_freely_reduced(Q)) return std::nullopt;
  const Letter p1 = P.front();
  const Letter p2 = P.back();
  const Letter q1 = Q.front();
  const Letter q2 = Q.back();

  if (P.size() == 2) {
    const int s = sign(PairKind::kType1, P, Q, O, reading);
    if (s == 0) return std::nullopt;
    return Linkage{PairKind::kType1, s};
  }

  const Letter x1 = P[1];
  const Letter x2 = P[P.size() - 2];
  // A reduced Y never equals Ȳ, so at most one of the two shapes applies.
  if (middles_equal(P, Q)) {
    if (p1 == q1 || p2 == q2) return std::nullopt;
    const LinearWord start{p1.inverse(), q1.inverse(), x1};
    const LinearWord end{p2, q2, x2.inverse()};
    const int a = value(evaluate(start, O, reading));
    if (a != value(evaluate(end, O, reading))) return std::nullopt;
    return Linkage{PairKind::kType2, a};
  }
  if (middles_inverse(P, Q)) {
    if (p1 == q2.inverse() || p2 == q1.inverse()) return std::nullopt;
    const LinearWord start{q2, p1.inverse(), x1};
    const LinearWord end{q1.inverse(), p2, x2.inverse()};
    const int a = value(evaluate(start, O, reading));
    if (a != value(evaluate(end, O, reading))) return std::nullopt;
    return Linkage{PairKind::kType3, a};
  }
  return std::nullopt;
}

std::vector<LinkedPair> enumerate_lp1(const CyclicWord& W, const SurfaceSymbol& O,
                                      const Lp1Options& options) {
  std::vector<LinkedPair> out;
  const std::size_t L = W.size();
  const std::size_t max_len = options.square_windows ? 2 * L : L;
  for (std::size_t m = 2; m <= max_len; ++m) {
    const auto wins = windows_of_length(W, m);
    for (std::size_t i = 0; i < L; ++i) {
      if (!is_freely_reduced(wins[i])) continue;
      for (std::size_t j = 0; j < L; ++j) {
        if (i == j) continue;
        if (auto link = is_linked(wins[i], wins[j], O, options.reading)) {
          out.push_back({{i, m}, {j, m}, link->kind, link->sign, 1, 1});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), by_occurrences);
  return out;
}

int exponent_cap(std::size_t own_length, std::size_t other_length) {
  return static_cast<int>((2 * own_length + other_length) / own_length);
}

int exponent_for(std::size_t length, std::size_t word_length) {
  return static_cast<int>((length + word_length - 1) / word_length);
}

std::vector<LinkedPair> enumerate_lp2(const CyclicWord& V, const CyclicWord& W,
                                      const SurfaceSymbol& O,
                                      const Lp2Options& options) {
  std::vector<LinkedPair> out;
  const std::size_t lv = V.size();
  const std::size_t lw = W.size();
  const auto cap_v =
      static_cast<std::size_t>(exponent_cap(lv, lw) + options.extra_exponent);
  const auto cap_w =
      static_cast<std::size_t>(exponent_cap(lw, lv) + options.extra_exponent);
  const std::size_t max_len = std::min(cap_v * lv, cap_w * lw);
  for (std::size_t m = 2; m <= max_len; ++m) {
    const auto wins_v = windows_of_length(V, m);
    const auto wins_w = windows_of_length(W, m);
    const int j = exponent_for(m, lv);
    const int k = exponent_for(m, lw);
    for (std::size_t a = 0; a < lv; ++a) {
      if (!is_freely_reduced(wins_v[a])) continue;
      for (std::size_t b = 0; b < lw; ++b) {
        if (auto link = is_linked(wins_v[a], wins_w[b], O, options.reading)) {
          out.push_back({{a, m}, {b, m}, link->kind, link->sign, j, k});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), by_occurrences);
  return out;
}

std::optional<Linkage> relink(const CyclicWord& V, const CyclicWord& W,
                              const LinkedPair& pair, const SurfaceSymbol& O,
                              SignReading reading) {
  if (pair.p.start >= V.size() || pair.q.start >= W.size()) return std::nullopt;
  if (pair.p.length < 2 || pair.p.length != pair.q.length) return std::nullopt;
  auto link = is_linked(window(V, pair.p), window(W, pair.q), O, reading);
  if (!link || link->kind != pair.kind) return std::nullopt;
  return link;
}

}  // namespace gtb
