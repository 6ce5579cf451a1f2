#include "gtb/structure_constants.hpp"

namespace gtb {
namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<std::vector<Rational>>;

struct Tables {
  const StructureConstants& sc;
  std::size_t n;

  const Vec& br(std::size_t i, std::size_t j) const { return sc.bracket.at({i, j}); }
  const Mat& co(std::size_t i) const { return sc.cobracket.at(i); }

  Vec bracket_with(std::size_t i, const Vec& y) const {
    Vec out(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += y[j] * br(i, j)[k];
    }
    return out;
  }
  Mat cobracket_of(const Vec& x) const {
    Mat out(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) out[a][b] += x[i] * co(i)[a][b];
      }
    }
    return out;
  }
};

std::string signed_rational(const Rational& c) {
  std::string s = c.str();
  return c > 0 ? "+" + s : s;
}

struct Residual {
  std::string text;
  void term(const Rational& c, const std::string& label) {
    if (c == 0) return;
    if (!text.empty()) text += ' ';
    text += signed_rational(c) + " " + label;
  }
  bool zero() const { return text.empty(); }
};

LawReport finish(Law law, const Residual& r, const std::string& witness) {
  LawReport out;
  out.law = std::string(law_name(law));
  out.holds = r.zero();
  out.residual = r.zero() ? "0" : r.text;
  out.witness = witness;
  return out;
}

LawReport check_law(const Tables& t, Law law) {
  const auto& names = t.sc.basis;
  const std::size_t n = t.n;
  auto tensor_label = [&](std::size_t a, std::size_t b) { return names[a] + "|" + names[b]; };

  switch (law) {
    case Law::kAntisymmetry:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Residual r;
          for (std::size_t k = 0; k < n; ++k) r.term(t.br(i, j)[k] + t.br(j, i)[k], names[k]);
          if (!r.zero()) return finish(law, r, names[i] + " " + names[j]);
        }
      }
      break;
    case Law::kJacobi:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            Vec sum = t.bracket_with(i, t.br(j, k));
            const Vec b = t.bracket_with(j, t.br(k, i));
            const Vec c = t.bracket_with(k, t.br(i, j));
            Residual r;
            for (std::size_t m = 0; m < n; ++m) r.term(sum[m] + b[m] + c[m], names[m]);
            if (!r.zero()) return finish(law, r, names[i] + " " + names[j] + " " + names[k]);
          }
        }
      }
      break;
    case Law::kCoskew:
      for (std::size_t i = 0; i < n; ++i) {
        Residual r;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            r.term(t.co(i)[a][b] + t.co(i)[b][a], tensor_label(a, b));
          }
        }
        if (!r.zero()) return finish(law, r, names[i]);
      }
      break;
    case Law::kCoJacobi:
      for (std::size_t i = 0; i < n; ++i) {
        // nested[a][b][c]: coefficient of e_a⊗e_b⊗e_c in (id⊗δ)δ(e_i).
        std::vector<Rational> nested(n * n * n);
        auto at = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t m = 0; m < n; ++m) {
            if (t.co(i)[a][m] == 0) continue;
            for (std::size_t b = 0; b < n; ++b) {
              for (std::size_t c = 0; c < n; ++c) {
                nested[at(a, b, c)] += t.co(i)[a][m] * t.co(m)[b][c];
              }
            }
          }
        }
        Residual r;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
              // (id + ε + ε²) with ε(x⊗y⊗z) = z⊗x⊗y, read at a⊗b⊗c.
              const Rational v = nested[at(a, b, c)] + nested[at(b, c, a)] + nested[at(c, a, b)];
              r.term(v, names[a] + "|" + names[b] + "|" + names[c]);
            }
          }
        }
        if (!r.zero()) return finish(law, r, names[i]);
      }
      break;
    case Law::kCompatibility:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Mat lhs = t.cobracket_of(t.br(i, j));
          // Subtract e_i·δ(e_j) and add e_j·δ(e_i).
          auto apply_action = [&](std::size_t x, std::size_t y, int s) {
            const Mat& d = t.co(y);
            for (std::size_t a = 0; a < n; ++a) {
              for (std::size_t b = 0; b < n; ++b) {
                if (d[a][b] == 0) continue;
                for (std::size_t k = 0; k < n; ++k) {
                  lhs[k][b] -= s * d[a][b] * t.br(x, a)[k];
                  lhs[a][k] -= s * d[a][b] * t.br(x, b)[k];
                }
              }
            }
          };
          apply_action(i, j, 1);
          apply_action(j, i, -1);
          Residual r;
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) r.term(lhs[a][b], tensor_label(a, b));
          }
          if (!r.zero()) return finish(law, r, names[i] + " " + names[j]);
        }
      }
      break;
    case Law::kInvolutive:
      for (std::size_t i = 0; i < n; ++i) {
        Vec sum(n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (t.co(i)[a][b] == 0) continue;
            for (std::size_t k = 0; k < n; ++k) sum[k] += t.co(i)[a][b] * t.br(a, b)[k];
          }
        }
        Residual r;
        for (std::size_t k = 0; k < n; ++k) r.term(sum[k], names[k]);
        if (!r.zero()) return finish(law, r, names[i]);
      }
      break;
  }
  return finish(law, Residual{}, "");
}

}  // namespace

StructureConstants make_structure_constants(
    std::vector<std::string> basis,
    const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vec>>& brackets,
    const std::map<std::size_t, Mat>& cobrackets) {
  StructureConstants sc;
  sc.basis = std::move(basis);
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sc.bracket[{i, j}] = Vec(n);
    sc.cobracket[i] = Mat(n, Vec(n));
  }
  for (const auto& [ij, v] : brackets) {
    sc.bracket[ij] = v;
    Vec neg(v);
    for (auto& c : neg) c = -c;
    sc.bracket[{ij.second, ij.first}] = neg;
  }
  for (const auto& [i, m] : cobrackets) sc.cobracket[i] = m;
  return sc;
}

void require_total(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = sc.bracket.find({i, j});
      if (it == sc.bracket.end() || it->second.size() != n) {
        throw Error(ErrorKind::kIncompleteTable,
                    "bracket [" + sc.basis[i] + ", " + sc.basis[j] + "] missing or mis-sized");
      }
    }
    auto it = sc.cobracket.find(i);
    bool ok = it != sc.cobracket.end() && it->second.size() == n;
    if (ok) {
      for (const auto& row : it->second) ok = ok && row.size() == n;
    }
    if (!ok) {
      throw Error(ErrorKind::kIncompleteTable,
                  "cobracket of " + sc.basis[i] + " missing or mis-sized");
    }
  }
}

std::vector<LawReport> check_structure_constants(const StructureConstants& sc,
                                                 std::span<const Law> laws) {
  require_total(sc);
  const Tables tables{sc, sc.dim()};
  std::vector<LawReport> out;
  for (Law law : laws) out.push_back(check_law(tables, law));
  return out;
}

std::vector<Law> bialgebra_laws() {
  return {Law::kAntisymmetry, Law::kJacobi, Law::kCoskew, Law::kCoJacobi,
          Law::kCompatibility};
}

StructureConstants sl2() {
  // H = 0, X+ = 1, X- = 2
  const Rational half(1, 2);
  Mat d1(3, Vec(3)), d2(3, Vec(3));
  d1[1][0] = half;
  d1[0][1] = -half;
  d2[2][0] = half;
  d2[0][2] = -half;
  return make_structure_constants({"H", "X+", "X-"},
                                  {{{1, 2}, {1, 0, 0}}, {{0, 1}, {0, 2, 0}}, {{0, 2}, {0, 0, -2}}},
                                  {{1, d1}, {2, d2}});
}

StructureConstants two_dimensional_b() {
  const Rational half(1, 2);
  Mat d(2, Vec(2));
  d[1][0] = half;
  d[0][1] = -half;
  return make_structure_constants({"H", "X"}, {{{0, 1}, {0, 2}}}, {{1, d}});
}

StructureConstants sl2_dual() {
  // Phi = 0, Psi+ = 1, Psi- = 2
  const Rational half(1, 2);
  Mat d0(3, Vec(3)), d1(3, Vec(3)), d2(3, Vec(3));
  d0[1][2] = 1;
  d0[2][1] = -1;
  d1[0][1] = 2;
  d1[1][0] = -2;
  d2[0][2] = -2;
  d2[2][0] = 2;
  return make_structure_constants(
      {"Phi", "Psi+", "Psi-"},
      {{{1, 0}, {0, half, 0}}, {{2, 0}, {0, 0, half}}, {{1, 2}, {0, 0, 0}}},
      {{0, d0}, {1, d1}, {2, d2}});
}

}  // namespace gtb
