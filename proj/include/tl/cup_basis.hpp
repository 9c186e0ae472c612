#pragma once
// Tableau-indexed basis {t_i} of the spin sector W_n and the real action
// matrices eps_i (TL generators), E/F (quantum-group step operators) and
// H = sum_i eps_i, all computed through the graphical cup-pattern rules.

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "tl/diagram.hpp"
#include "tl/scalars.hpp"

namespace tl {

// Shape lambda' inside the n x (N-n) rectangle (weakly decreasing rows); the
// standard filling is never stored -- it is unique given the shape.
struct Tableau {
  int n = 0;
  std::vector<int> shape;  // nonzero row lengths only
};

// Half diagram on N points: non-crossing cups plus labeled defect points.
// Spin content: each cup carries one down spin, each defect its fixed sign,
// so a pattern with c cups and m minus defects lies in sector n = c + m.
struct CupPattern {
  std::vector<std::pair<int, int>> cups;     // (a,b), a<b, sorted
  std::vector<std::pair<int, int>> defects;  // (position, sign +-1), sorted

  bool operator==(const CupPattern& o) const { return cups == o.cups && defects == o.defects; }
  bool operator<(const CupPattern& o) const {
    return cups != o.cups ? cups < o.cups : defects < o.defects;
  }
};

struct CupBasisVector {
  Tableau tableau;
  Word word;           // the algebra element a_i
  CupPattern pattern;  // a_i applied to Omega_n, lower boundary dropped
};

using Basis = std::vector<CupBasisVector>;

// Omega_n: no cups, n minus defects then N-n plus defects.
CupPattern omega_pattern(int N, int n);

// All subshapes of the n x (N-n) rectangle, graded by box count then lex;
// the empty shape (Omega_n) comes first.
std::vector<std::vector<int>> shapes_in_rectangle(int N, int n);

// Standard filling of row k (1-based) is n-k+1 .. n-k+len; the word reads the
// rows bottom-to-top, each row right-to-left (so the last letter is e_n).
Word tableau_to_word(const Tableau& t);

// Result of acting with e_i on a pattern: coeff in {0, 1, loop_weight}.
struct GenAction {
  enum Kind { zero, unit, loop } kind;
  CupPattern pattern;  // valid unless kind == zero
};
GenAction apply_generator(const CupPattern& pat, int i, int N);

Basis enumerate_basis(int N, int n);

// eps_i on W_n: each column has at most one nonzero entry, 1 or -(q+q^{-1}).
Eigen::MatrixXd generator_action(int i, int N, int n, const Basis& basis, const QParam& p);

// (E, F): E maps W_n -> W_{n-1} (rows indexed by basis_lo), F maps
// W_n -> W_{n+1} (rows indexed by basis_hi).  E = sum_m [m]_q E_m where E_m
// joins the m-th and (m+1)-th down-spin defect (cups in between are ignored
// in the counting) and the last term flips the rightmost down spin; F is the
// mirror image, counting up spins from the right and flipping the leftmost.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> qgroup_action(
    int N, int n, const Basis& basis_n, const Basis* basis_lo, const Basis* basis_hi,
    const QParam& p);

Eigen::MatrixXd hamiltonian_t_basis(int N, int n, const Basis& basis, const QParam& p);

// ASCII forms for the CLI: "(()) -+"-style cup pattern and a Young diagram.
std::string render_pattern(const CupPattern& pat, int N);
std::string render_tableau(const Tableau& t);

}  // namespace tl
