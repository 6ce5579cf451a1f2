#include <doctest.h>

#include "gtb/format.hpp"
#include "util.hpp"

using namespace gtb;
using testutil::cw;

TEST_CASE("formal sums") {
  FormalSum x;
  CHECK(format(x) == "0\n");
  CHECK(format(x, OutputFormat::kRecords) == "coeff=0\n");
  x.add(cw("a2"), -2);
  x.add(cw("a1a2"), 1);
  CHECK(format(x) == "+1 a1a2\n-2 a2\n");
  CHECK(format(x, OutputFormat::kRecords) == "coeff=+1 word=a1a2\ncoeff=-2 word=a2\n");
}

TEST_CASE("tensors") {
  Tensor2 t;
  t.add({cw("a1"), cw("a2")}, 1);
  t.add({cw("a2"), cw("a1")}, -1);
  CHECK(format(t) == "+1 a1 | a2\n-1 a2 | a1\n");
  CHECK(format(t, OutputFormat::kRecords) ==
        "coeff=+1 left=a1 right=a2\ncoeff=-1 left=a2 right=a1\n");
  Tensor3 u;
  u.add({cw("a1"), cw("a2"), cw("a3")}, 3);
  CHECK(format(u) == "+3 a1 | a2 | a3\n");
  CHECK(format(u, OutputFormat::kRecords) == "coeff=+3 first=a1 second=a2 third=a3\n");
}

TEST_CASE("pairs") {
  const auto O = SurfaceSymbol::parse("a1a2A1A2");
  const auto V = cw("a1", 2);
  const auto W = cw("a2", 2);
  const auto pairs = enumerate_lp2(V, W, O);
  CHECK(format_pairs(pairs, V, W) == "type=1 sign=+1 P=0+2 Q=0+2 Pword=a1a1 Qword=a2a2\n");
  CHECK(format_pairs(pairs, V, W, OutputFormat::kRecords) ==
        "type=1 sign=+1 P=0+2 Q=0+2 Pword=a1a1 Qword=a2a2 j=2 k=2\n");
  CHECK(format_signed(0) == "0");
  CHECK(format_signed(-3) == "-3");
}
