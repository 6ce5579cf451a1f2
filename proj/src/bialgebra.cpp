#include "gtb/bialgebra.hpp"

namespace gtb {
namespace {

std::size_t last_position(const CyclicWord& w, Occurrence occ) {
  return (occ.start + occ.length - 1) % w.size();
}

// Cyclic distance from a to b going forward.
std::size_t forward(std::size_t a, std::size_t b, std::size_t n) {
  return (b + n - a) % n;
}

CyclicWord reduced_or_throw(std::span<const Letter> w, const char* what) {
  auto c = CyclicWord::from_linear(w);
  if (!c) throw Error(ErrorKind::kInvalidPair, std::string(what) + " is empty");
  return *c;
}

void require_linked(const CyclicWord& V, const CyclicWord& W,
                    const LinkedPair& pair, const SurfaceSymbol& O,
                    SignReading reading) {
  if (!relink(V, W, pair, O, reading)) {
    throw Error(ErrorKind::kInvalidPair,
                "P=" + std::to_string(pair.p.start) + "+" +
                    std::to_string(pair.p.length) +
                    " Q=" + std::to_string(pair.q.start) + "+" +
                    std::to_string(pair.q.length) + " is not a linked pair of (" +
                    V.text() + ", " + W.text() + ")");
  }
}

}  // namespace

Tensor2 swap(const Tensor2& t) {
  Tensor2 out;
  for (const auto& [k, c] : t) out.add({k.second, k.first}, c);
  return out;
}

Tensor3 rotate(const Tensor3& t) {
  Tensor3 out;
  for (const auto& [k, c] : t) out.add({k.third, k.first, k.second}, c);
  return out;
}

Tensor3 cyclic_symmetrize(const Tensor3& t) {
  Tensor3 once = rotate(t);
  Tensor3 twice = rotate(once);
  return t + once + twice;
}

WordPair delta_cut_unchecked(const CyclicWord& W, const LinkedPair& pair) {
  const std::size_t L = W.size();
  const std::size_t p2 = last_position(W, pair.p);
  const std::size_t q2 = last_position(W, pair.q);
  if (pair.kind == PairKind::kType3) {
    const std::size_t p1 = pair.p.start;
    const std::size_t q1 = pair.q.start;
    const auto w1 = window(W, {p2, forward(p2, q1, L) + 1});
    const auto w2 = window(W, {q2, forward(q2, p1, L) + 1});
    return {reduced_or_throw(w1, "delta_1"), reduced_or_throw(w2, "delta_2")};
  }
  const std::size_t n1 = forward(p2, q2, L);
  if (n1 == 0) throw Error(ErrorKind::kInvalidPair, "p2 and q2 coincide");
  const auto w1 = window(W, {p2, n1});
  const auto w2 = window(W, {q2, L - n1});
  return {reduced_or_throw(w1, "delta_1"), reduced_or_throw(w2, "delta_2")};
}

WordPair delta_cut(const CyclicWord& W, const LinkedPair& pair,
                   const SurfaceSymbol& O, SignReading reading) {
  require_linked(W, W, pair, O, reading);
  return delta_cut_unchecked(W, pair);
}

Tensor2 cobracket(const CyclicWord& W, const SurfaceSymbol& O, SignReading reading) {
  Tensor2 out;
  for (const auto& pair : enumerate_lp1(W, O, {reading})) {
    if (pair.sign == 0) continue;
    out.add(delta_cut_unchecked(W, pair), pair.sign);
  }
  return out;
}

Tensor2 cobracket(const FormalSum& x, const SurfaceSymbol& O, SignReading reading) {
  Tensor2 out;
  for (const auto& [w, c] : x) out += c * cobracket(w, O, reading);
  return out;
}

Tensor2 cobracket_grouped(const CyclicWord& W, const SurfaceSymbol& O,
                          SignReading reading) {
  Tensor2 out;
  for (const auto& pair : enumerate_lp1(W, O, {reading})) {
    // Each unordered pair once: keep the representative with p < q.
    if (pair.sign == 0 || !(pair.p < pair.q)) continue;
    const auto cut = delta_cut_unchecked(W, pair);
    out.add(cut, pair.sign);
    out.add({cut.second, cut.first}, -pair.sign);
  }
  return out;
}

CyclicWord gamma_unchecked(const CyclicWord& V, const CyclicWord& W,
                           const LinkedPair& pair) {
  const std::size_t q2 = last_position(W, pair.q);
  LinearWord joined;
  if (pair.kind == PairKind::kType3) {
    // Based at the start of Y: V from y1, W from q2 (W ends with Ȳ there).
    joined = V.rotation((pair.p.start + 1) % V.size());
  } else {
    joined = V.rotation(last_position(V, pair.p));
  }
  const auto tail = W.rotation(q2);
  joined.insert(joined.end(), tail.begin(), tail.end());
  return reduced_or_throw(joined, "gamma");
}

CyclicWord gamma(const CyclicWord& V, const CyclicWord& W, const LinkedPair& pair,
                 const SurfaceSymbol& O, SignReading reading) {
  require_linked(V, W, pair, O, reading);
  return gamma_unchecked(V, W, pair);
}

FormalSum bracket(const CyclicWord& V, const CyclicWord& W, const SurfaceSymbol& O,
                  SignReading reading) {
  FormalSum out;
  for (const auto& pair : enumerate_lp2(V, W, O, {reading, 0})) {
    if (pair.sign == 0) continue;
    out.add(gamma_unchecked(V, W, pair), pair.sign);
  }
  return out;
}

FormalSum bracket(const FormalSum& x, const FormalSum& y, const SurfaceSymbol& O,
                  SignReading reading) {
  FormalSum out;
  for (const auto& [v, a] : x) {
    for (const auto& [w, b] : y) out += (a * b) * bracket(v, w, O, reading);
  }
  return out;
}

WordPair iterated_cut(const CyclicWord& W, const LinkedPair& outer, int i,
                      const LinkedPair& inner, const SurfaceSymbol& O,
                      SignReading reading) {
  if (i != 1 && i != 2) {
    throw Error(ErrorKind::kInvalidPair, "cut index must be 1 or 2");
  }
  const auto first = delta_cut(W, outer, O, reading);
  const CyclicWord& host = i == 1 ? first.first : first.second;
  return delta_cut(host, inner, O, reading);
}

}  // namespace gtb
