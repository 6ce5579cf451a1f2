#include <doctest.h>

#include <algorithm>

#include "gtb/corpus.hpp"
#include "gtb/words.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace gtb;
using testutil::cw;
using testutil::error_of;
using testutil::lw;

TEST_CASE("parse_word") {
  const auto w = parse_word("a1A2a1", {2});
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Letter{1, false});
  CHECK(w[1] == Letter{2, true});
  CHECK(w[2] == Letter{1, false});
  CHECK(parse_word("", {1}).empty());
  CHECK(error_of([] { parse_word("a3", {2}); }) == ErrorKind::kInvalidLetter);
  CHECK(error_of([] { parse_word("a0", {2}); }) == ErrorKind::kInvalidLetter);
  CHECK(error_of([] { parse_word("b1", {2}); }) == ErrorKind::kParseError);
  CHECK(error_of([] { parse_word("a", {2}); }) == ErrorKind::kParseError);
  CHECK(error_of([] { parse_word("a01", {2}); }) == ErrorKind::kParseError);
  CHECK(to_string(parse_word("a1A2a10", {10})) == "a1A2a10");
}

TEST_CASE("letter order") {
  CHECK(Letter{1, false} < Letter{1, true});
  CHECK(Letter{1, true} < Letter{2, false});
  const auto letters = Alphabet{2}.letters();
  CHECK(std::is_sorted(letters.begin(), letters.end()));
  CHECK(letters.size() == 4);
}

TEST_CASE("bar") {
  CHECK(bar(lw("a1a2")) == lw("A2A1"));
  CHECK(bar(LinearWord{}).empty());
  CHECK(bar(lw("a1")) == lw("A1"));
  for (const auto& w : all_reduced_cyclic_words({2}, 4)) {
    CHECK(bar(bar(w.letters())) == w.letters());
    CHECK(bar(bar(w)) == w);
  }
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(lw("a1A1a2")) == lw("a2"));
  CHECK(free_reduce(lw("a1a2")) == lw("a1a2"));
  CHECK(free_reduce(lw("a1a2A2A1")).empty());
  CHECK(is_freely_reduced(lw("a1a2A1")));
  CHECK_FALSE(is_cyclically_reduced(lw("a1a2A1")));
}

TEST_CASE("cyclic_reduce_canonicalize") {
  CHECK(cyclic_reduce_canonicalize(lw("a1a2A1"))->text() == "a2");
  CHECK(cyclic_reduce_canonicalize(lw("a2a1"))->text() == "a1a2");
  CHECK_FALSE(cyclic_reduce_canonicalize(lw("a1A1")).has_value());
  CHECK(error_of([] { cw("a1A1"); }) == ErrorKind::kParseError);
}

TEST_CASE("canonical form agrees with the naive rotation minimum") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::size_t len = 1 + rng.below(12);
    LinearWord w;
    for (std::size_t k = 0; k < len; ++k) {
      w.push_back(Letter{1 + static_cast<int>(rng.below(2)), rng.below(2) == 1});
    }
    const auto lib = cyclic_reduce_canonicalize(w);
    const auto ref = oracle::canonical(oracle::reduce(oracle::parse(to_string(w))));
    if (ref.empty()) {
      CHECK_FALSE(lib.has_value());
      continue;
    }
    REQUIRE(lib.has_value());
    CHECK(lib->text() == oracle::text(ref));
    if (is_cyclically_reduced(w)) {
      // Booth's index lands on the least rotation.
      const auto r = least_rotation(w);
      LinearWord rot(w.begin() + static_cast<long>(r), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
      CHECK(to_string(rot) == oracle::text(ref));
    }
  }
}

TEST_CASE("canonicalization is rotation invariant") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    LinearWord w;
    const std::size_t len = 1 + rng.below(9);
    for (std::size_t k = 0; k < len; ++k) {
      w.push_back(Letter{1 + static_cast<int>(rng.below(3)), rng.below(2) == 1});
    }
    const auto base = cyclic_reduce_canonicalize(w);
    for (std::size_t r = 1; r < w.size(); ++r) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
      CHECK(cyclic_reduce_canonicalize(w) == base);
    }
  }
}

TEST_CASE("power") {
  CHECK(power(cw("a1a2"), 2) == lw("a1a2a1a2"));
  CHECK(power(cw("a1"), 3) == lw("a1a1a1"));
  CHECK(power(cw("a2a1A2"), 1) == cw("a2a1A2").letters());
  CHECK(error_of([] { power(cw("a1"), 0); }) == ErrorKind::kInvalidExponent);
  for (const auto& w : all_reduced_cyclic_words({2}, 3)) {
    CHECK(power(w, 4).size() == 4 * w.size());
  }
}

TEST_CASE("smallest_period") {
  auto p = smallest_period(cw("a1a2a1a2"));
  CHECK(p.root == cw("a1a2"));
  CHECK(p.exponent == 2);
  p = smallest_period(cw("a1a1a2"));
  CHECK(p.root == cw("a1a1a2"));
  CHECK(p.exponent == 1);
  CHECK(smallest_period(cw("a1")).exponent == 1);
  CHECK(is_primitive(cw("a1a2")));
  CHECK_FALSE(is_primitive(cw("A1A1A1")));
  for (const auto& w : all_reduced_cyclic_words({2}, 3)) {
    for (int m = 1; m <= 3; ++m) {
      const auto wm = *CyclicWord::from_linear(power(w, m));
      const auto q = smallest_period(wm);
      CHECK(*CyclicWord::from_linear(power(q.root, q.exponent)) == wm);
      CHECK(q.exponent % m == 0);
    }
  }
}

TEST_CASE("window") {
  const auto w = cw("a1a1a2");
  CHECK(window(w, {2, 4}) == lw("a2a1a1a2"));
  CHECK(window(w, {0, 3}) == w.letters());
  CHECK(error_of([&] { window(w, {5, 1}); }) == ErrorKind::kInvalidOccurrence);
  CHECK(error_of([&] { window(w, {0, 0}); }) == ErrorKind::kInvalidOccurrence);
}

TEST_CASE("cyclic words compare by canonical form") {
  CHECK(cw("a2a1") == cw("a1a2"));
  CHECK(cw("a1a2") != cw("a2a1a1"));
  CHECK(std::hash<CyclicWord>{}(cw("a2a1")) == std::hash<CyclicWord>{}(cw("a1a2")));
  CHECK(bar(cw("a1a2")).text() == "A1A2");
}
