#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "gtb/linked_pairs.hpp"
#include "gtb/words.hpp"

namespace gtb {

using Coefficient = std::int64_t;

/// Finitely supported integer combination of basis keys. Zero coefficients
/// are never stored, so two combinations are equal iff their maps are.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Coefficient>;

  LinearCombination() = default;
  explicit LinearCombination(const Key& key, Coefficient c = 1) { add(key, c); }

  void add(const Key& key, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(Coefficient s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator-(LinearCombination a) { return a *= -1; }
  friend LinearCombination operator*(Coefficient s, LinearCombination a) {
    return a *= s;
  }

  Coefficient coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  Terms terms_;
};

struct WordPair {
  CyclicWord first;
  CyclicWord second;
  friend bool operator==(const WordPair&, const WordPair&) = default;
  friend auto operator<=>(const WordPair&, const WordPair&) = default;
};

struct WordTriple {
  CyclicWord first;
  CyclicWord second;
  CyclicWord third;
  friend bool operator==(const WordTriple&, const WordTriple&) = default;
  friend auto operator<=>(const WordTriple&, const WordTriple&) = default;
};

/// Elements of V, V⊗V and V⊗V⊗V.
using FormalSum = LinearCombination<CyclicWord>;
using Tensor2 = LinearCombination<WordPair>;
using Tensor3 = LinearCombination<WordTriple>;

/// s(x⊗y) = y⊗x.
Tensor2 swap(const Tensor2& t);
/// ε(x⊗y⊗z) = z⊗x⊗y.
Tensor3 rotate(const Tensor3& t);
/// (id + ε + ε²)(t).
Tensor3 cyclic_symmetrize(const Tensor3& t);

/// The two words cut out of W by a self-linked pair.
/// Types 1/2: cut right before p2 and right before q2; W1 starts at p2 and
/// W2 at q2. Type 3: W1 runs from p2 to q1 and W2 from q2 to p1.
/// Throws kInvalidPair unless `pair` is a linked pair of W.
WordPair delta_cut(const CyclicWord& W, const LinkedPair& pair,
                   const SurfaceSymbol& O,
                   SignReading reading = SignReading::kCyclicOrder);

/// Same cut arithmetic without re-validating the pair.
WordPair delta_cut_unchecked(const CyclicWord& W, const LinkedPair& pair);

/// δ(W) = Σ sign(P,Q) δ1(P,Q) ⊗ δ2(P,Q) over LP1(W).
Tensor2 cobracket(const CyclicWord& W, const SurfaceSymbol& O,
                  SignReading reading = SignReading::kCyclicOrder);
Tensor2 cobracket(const FormalSum& x, const SurfaceSymbol& O,
                  SignReading reading = SignReading::kCyclicOrder);

/// The grouped form: one term sign·(δ1⊗δ2 − δ2⊗δ1) per unordered pair
/// {(P,Q),(Q,P)}. Equals cobracket(); kept as a second route for tests.
Tensor2 cobracket_grouped(const CyclicWord& W, const SurfaceSymbol& O,
                          SignReading reading = SignReading::kCyclicOrder);

/// γ(P,Q) for a pair of LP2(V,W).
/// Types 1/2: V read from p2 followed by W read from q2. Type 3: V and W
/// with the shared segment Y / Ȳ cancelled; equivalently the reduction of V
/// read from Y's first letter followed by W read from q2.
/// Throws kInvalidPair unless `pair` is a linked pair of (V, W).
CyclicWord gamma(const CyclicWord& V, const CyclicWord& W, const LinkedPair& pair,
                 const SurfaceSymbol& O,
                 SignReading reading = SignReading::kCyclicOrder);

CyclicWord gamma_unchecked(const CyclicWord& V, const CyclicWord& W,
                           const LinkedPair& pair);

/// [V, W] = Σ sign(P,Q) γ(P,Q) over LP2(V,W).
FormalSum bracket(const CyclicWord& V, const CyclicWord& W, const SurfaceSymbol& O,
                  SignReading reading = SignReading::kCyclicOrder);
FormalSum bracket(const FormalSum& x, const FormalSum& y, const SurfaceSymbol& O,
                  SignReading reading = SignReading::kCyclicOrder);

/// Cuts δ_i(outer) by `inner`, returning (δ_1i, δ_2i).
/// Throws kInvalidPair unless outer ∈ LP1(W) and inner ∈ LP1(δ_i(outer)).
WordPair iterated_cut(const CyclicWord& W, const LinkedPair& outer, int i,
                      const LinkedPair& inner, const SurfaceSymbol& O,
                      SignReading reading = SignReading::kCyclicOrder);

}  // namespace gtb
