#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gtb/axioms.hpp"

namespace gtb {

using Rational = boost::multiprecision::cpp_rational;

/// A finite-dimensional bialgebra given by structure constants over Q.
///   bracket[{i, j}][k]     = coefficient of e_k in [e_i, e_j]
///   cobracket[i][a][b]     = coefficient of e_a ⊗ e_b in δ(e_i)
/// Both tables must be total over the basis; antisymmetry is checked, not
/// assumed.
struct StructureConstants {
  std::vector<std::string> basis;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> bracket;
  std::map<std::size_t, std::vector<std::vector<Rational>>> cobracket;

  std::size_t dim() const { return basis.size(); }
};

/// Builds total tables from the listed brackets (completed antisymmetrically,
/// unlisted pairs zero) and cobrackets (unlisted generators zero).
StructureConstants make_structure_constants(
    std::vector<std::string> basis,
    const std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::vector<Rational>>>&
        brackets,
    const std::map<std::size_t, std::vector<std::vector<Rational>>>& cobrackets);

/// Throws kIncompleteTable when an entry is missing or mis-sized.
void require_total(const StructureConstants& sc);

/// Checks each requested law over every basis tuple with exact rationals.
/// One report per law; the witness names the first failing tuple.
std::vector<LawReport> check_structure_constants(const StructureConstants& sc,
                                                 std::span<const Law> laws);

/// Antisymmetry, Jacobi, coskew, co-Jacobi and compatibility.
std::vector<Law> bialgebra_laws();

/// sl2 = <H, X+, X->: [X+,X-] = H, [H,X±] = ±2X±, δ(H) = 0,
/// δ(X±) = ½(X±⊗H − H⊗X±).
StructureConstants sl2();
/// <H, X>: [H,X] = 2X, δ(H) = 0, δ(X) = ½(X⊗H − H⊗X).
StructureConstants two_dimensional_b();
/// Dual of sl2 on <Φ, Ψ+, Ψ->: [Ψ±,Φ] = ½Ψ±, [Ψ+,Ψ-] = 0,
/// δ(Ψ±) = ±2(Φ⊗Ψ± − Ψ±⊗Φ), δ(Φ) = Ψ+⊗Ψ- − Ψ-⊗Ψ+.
StructureConstants sl2_dual();

}  // namespace gtb
