#include <doctest.h>

#include "gtb/structure_constants.hpp"
#include "util.hpp"

using namespace gtb;
using testutil::error_of;

namespace {

bool all_hold(const StructureConstants& sc, const std::vector<Law>& laws) {
  for (const auto& r : check_structure_constants(sc, laws)) {
    if (!r.holds) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fixtures satisfy the bialgebra laws") {
  const auto laws = bialgebra_laws();
  CHECK(all_hold(sl2(), laws));
  CHECK(all_hold(two_dimensional_b(), laws));
  CHECK(all_hold(sl2_dual(), laws));
}

TEST_CASE("fixture constants") {
  const auto g = sl2();
  CHECK(g.bracket.at({1, 2}) == std::vector<Rational>{1, 0, 0});
  CHECK(g.bracket.at({2, 1}) == std::vector<Rational>{-1, 0, 0});
  CHECK(g.bracket.at({0, 1}) == std::vector<Rational>{0, 2, 0});
  CHECK(g.cobracket.at(1)[1][0] == Rational(1, 2));
  const auto d = sl2_dual();
  CHECK(d.bracket.at({1, 0}) == std::vector<Rational>{0, Rational(1, 2), 0});
  CHECK(d.cobracket.at(0)[1][2] == 1);
}

TEST_CASE("perturbed sl2 fails co-Jacobi or compatibility") {
  auto g = sl2();
  g.cobracket[0][1][2] = 1;
  bool either = false;
  for (const auto& r : check_structure_constants(g, all_laws())) {
    if (r.law == "co-jacobi" || r.law == "compatibility") either = either || !r.holds;
  }
  CHECK(either);
}

TEST_CASE("broken brackets are reported with a witness") {
  auto g = two_dimensional_b();
  g.bracket[{1, 0}] = {0, 2};
  const std::vector<Law> laws{Law::kAntisymmetry};
  const auto r = check_structure_constants(g, laws).at(0);
  CHECK_FALSE(r.holds);
  CHECK(r.residual == "+4 X");
  CHECK(r.witness == "H X");
}

TEST_CASE("incomplete tables are rejected") {
  auto g = sl2();
  g.bracket.erase({0, 0});
  CHECK(error_of([&] { require_total(g); }) == ErrorKind::kIncompleteTable);
  auto h = sl2();
  h.cobracket[2].pop_back();
  CHECK(error_of([&] { check_structure_constants(h, bialgebra_laws()); }) ==
        ErrorKind::kIncompleteTable);
}
