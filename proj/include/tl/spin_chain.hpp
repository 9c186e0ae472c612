#pragma once
// 2^N-dimensional spin representation on (C^2)^{otimes N}: TL generator
// matrices, Hamiltonian, iterated coproduct of U_q(sl2), parity / spin
// reversal, and the change of basis B between cup patterns and spin states.
//
// Index convention: basis states are sign strings encoded as bitmasks with
// site 1 at the most significant bit, v_+ = bit 0 and v_- = bit 1.  Then the
// parity operator P is bit reversal and the spin reversal R is the bitwise
// complement.  Time reversal T is antilinear (componentwise conjugation) and
// is never materialized as a matrix.

#include <Eigen/Dense>
#include <vector>

#include "tl/cup_basis.hpp"
#include "tl/scalars.hpp"

namespace tl {

using CMat = Eigen::MatrixXcd;

inline constexpr int spin_max_n = 12;

CMat e_matrix(int i, int N, const QParam& p);
CMat hamiltonian_spin(int N, const QParam& p);

struct Coproduct {
  CMat E, F, K;  // Delta^(N)(E), Delta^(N)(F), Delta^(N)(K) = K^{otimes N}
};
Coproduct coproduct_operators(int N, const QParam& p);

CMat parity_matrix(int N);         // P: reverses the tensor factors
CMat spin_reversal_matrix(int N);  // R: flips every spin

// Bitmasks with popcount n, ascending: the spin states spanning W_n.
std::vector<int> sector_states(int N, int n);

// Square C(N,n) x C(N,n) change of basis on sector n: column j is the spin
// expansion of t_j, each cup (a,b) contributing v+_a v-_b - q v-_a v+_b and
// each defect its fixed spin.
CMat basis_change(int N, int n, const QParam& p, const Basis& basis);

// PT and RT in t-basis coordinates: pi_n = B^{-1} P conj(B) on W_n and
// rho_n = B_{N-n}^{-1} R conj(B_n) : W_n -> W_{N-n}.
CMat pt_matrix(int N, int n, const QParam& p, const Basis& basis);
CMat rt_matrix(int N, int n, const QParam& p, const Basis& basis_n, const Basis& basis_conj);

// Restriction of a sector-preserving spin operator to the states of W_n.
CMat restrict_to_sector(const CMat& op, const std::vector<int>& states);

}  // namespace tl
