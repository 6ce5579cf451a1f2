#include <doctest.h>

#include "faults.hpp"
#include "gtb/axioms.hpp"
#include "gtb/corpus.hpp"
#include "util.hpp"

using namespace gtb;
using testutil::cw;

namespace {

const SurfaceSymbol& torus() {
  static const auto O = SurfaceSymbol::parse("a1a2A1A2");
  return O;
}

}  // namespace

TEST_CASE("coalgebra examples") {
  CHECK(check_coalgebra(cw("a1", 2), torus()).holds);
  const auto r = check_coalgebra(cw("a1a2A1", 2), torus());
  CHECK(r.holds);
  CHECK(r.residual == "0");
}

TEST_CASE("algebra examples") {
  const auto ops = standard_operations(torus());
  for (const auto& W : all_reduced_cyclic_words({2}, 3)) {
    CHECK(check_algebra(cw("a1", 2), cw("a1", 2), W, ops).holds);
  }
  CHECK(check_algebra(cw("a1", 2), cw("a2", 2), cw("a1a2", 2), torus()).holds);
}

TEST_CASE("compatibility examples") {
  for (const auto& V : all_reduced_cyclic_words({2}, 3)) {
    CHECK(check_compatibility(V, V, torus()).holds);
  }
  CHECK(check_compatibility(cw("a1", 2), cw("a2", 2), torus()).holds);
}

TEST_CASE("involutive examples") {
  CHECK(check_involutive(cw("a1", 2), torus()).holds);
  CHECK(check_involutive(cw("a1a2A1", 2), torus()).holds);
}

TEST_CASE("law suite holds on every standard surface") {
  SuiteOptions opts;
  opts.pair_samples = 300;
  opts.triple_samples = 300;
  for (const char* text : {"a1a2A1A2", "a2a1A2A1", "a1a2a3A1A2A3"}) {
    const auto O = SurfaceSymbol::parse(text);
    const auto words = corpus(O.alphabet(), 6, 60, 5);
    const auto result = run_law_suite(words, standard_operations(O), opts);
    for (const auto& t : result.tallies) {
      INFO(text << " " << law_name(t.law));
      CHECK(t.checked > 0);
      CHECK(t.failed == 0);
    }
  }
}

TEST_CASE("the literal sign reading breaks Jacobi over three generators") {
  const auto O = SurfaceSymbol::parse("a1a2a3A1A2A3");
  const auto ops = standard_operations(O, SignReading::kLiteral);
  const auto r = check_jacobi(cw("a1"), cw("a2"), cw("a1a3"), ops);
  CHECK_FALSE(r.holds);
  CHECK(r.residual == "-1 a1a2a1a3\n");
  CHECK(check_jacobi(cw("a1"), cw("a2"), cw("a1a3"), standard_operations(O)).holds);
}

TEST_CASE("fault injection is detected") {
  const auto words = corpus(torus().alphabet(), 6, 60, 5);
  SuiteOptions opts;
  opts.pair_samples = 300;
  opts.triple_samples = 300;
  CHECK_FALSE(run_law_suite(words, faults::dropped_sign(torus()), opts).all_hold());
  CHECK_FALSE(run_law_suite(words, faults::shifted_cut(torus()), opts).all_hold());
  const auto r = check_coskew(cw("a1a1A2A2a1A2", 2), faults::dropped_sign(torus()));
  CHECK_FALSE(r.holds);
  CHECK(r.residual != "0");
  CHECK(r.witness == "a1a1A2A2a1A2");
}

TEST_CASE("law groups") {
  CHECK(parse_law_group("all")->size() == 6);
  CHECK(parse_law_group("algebra") == std::vector{Law::kAntisymmetry, Law::kJacobi});
  CHECK(parse_law_group("coalgebra") == std::vector{Law::kCoskew, Law::kCoJacobi});
  CHECK(parse_law_group("compat") == std::vector{Law::kCompatibility});
  CHECK(parse_law_group("involutive") == std::vector{Law::kInvolutive});
  CHECK_FALSE(parse_law_group("bogus"));
}

TEST_CASE("suite is deterministic in the seed") {
  const auto words = corpus(torus().alphabet(), 5, 20, 1);
  SuiteOptions opts;
  opts.laws = {Law::kJacobi, Law::kCompatibility};
  const auto a = run_law_suite(words, standard_operations(torus()), opts);
  const auto b = run_law_suite(words, standard_operations(torus()), opts);
  REQUIRE(a.tallies.size() == 2);
  CHECK(a.tallies[0].checked == b.tallies[0].checked);
  CHECK(a.tallies[1].checked == b.tallies[1].checked);
}
