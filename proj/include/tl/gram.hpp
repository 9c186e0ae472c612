#pragma once
// The oriented-diagram functional omega_n and the Gram matrix
// G_ij = omega_n(a_i* a_j), plus the fast path on the maximal-cup subspace
// W_max where only loop counts enter.

#include <Eigen/Dense>

#include "tl/cup_basis.hpp"
#include "tl/diagram.hpp"
#include "tl/scalars.hpp"

namespace tl {

struct OrientationCount {
  int x = 0;  // anticlockwise oriented arcs
  int y = 0;  // closed loops (from composition)
  int z = 0;  // unorientable arcs / through lines
};

// Label both boundaries with sigma_n = (-^n, +^{N-n}).  An arc with both ends
// on one boundary is orientable iff its endpoint signs differ; a through line
// is orientable iff its two signs agree.  Anticlockwise arcs are top arcs
// reading (-,+) left to right and bottom arcs reading (+,-).
OrientationCount orient_and_count(const WeightedDiagram& d, int n);

// omega_n(a) = (-1)^{x+y} (q+q^{-1})^y (q^{N/2-n}+q^{n-N/2})/(q^{N/2-x}+q^{x-N/2})
// if z = 0, else 0.
double omega(const WeightedDiagram& d, int n, const QParam& p);

// G_ij = omega_n(a_i* a_j) over the cup-basis order; real symmetric.
Eigen::MatrixXd gram_matrix(int N, int n, const QParam& p, const Basis& basis);

// Positions (within enumerate_basis(N, floor(N/2))) of the maximal-cup
// patterns spanning W_max.
std::vector<int> wmax_indices(const Basis& basis, int N);

// Gram matrix restricted to W_max, computed purely from half-diagram gluing:
// entry = (-1)^{n} (-q-q^{-1})^{y_ij} with y_ij the closed loops obtained by
// flipping pattern i onto pattern j.  Must equal the corresponding submatrix
// of gram_matrix(N, floor(N/2)).
Eigen::MatrixXd gram_wmax(int N, const QParam& p, const Basis& basis);

// Loop count of the half-diagram gluing star(pattern a) . pattern b.
int glue_loops(const CupPattern& a, const CupPattern& b, int N);

}  // namespace tl
