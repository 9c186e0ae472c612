#include "tl/spin_chain.hpp"

#include <stdexcept>

namespace tl {

namespace {

int require_dim(int N) {
  if (N < 1 || N > spin_max_n) throw std::length_error("spin chain: N out of range");
  return 1 << N;
}

inline int bit_at(int b, int N, int site) { return (b >> (N - site)) & 1; }  // site 1-based

}  // namespace

CMat e_matrix(int i, int N, const QParam& p) {
  const int dim = require_dim(N);
  if (i < 1 || i > N - 1) throw std::out_of_range("e_matrix: index");
  const std::complex<double> q = p.q(), qi = 1.0 / q;
  // local action on (v_s_i, v_s_{i+1}); rows/cols ordered ++, +-, -+, --
  // e = [[0,0,0,0],[0,-1/q,1,0],[0,1,-q,0],[0,0,0,0]]
  CMat M = CMat::Zero(dim, dim);
  for (int b = 0; b < dim; ++b) {
    const int bi = bit_at(b, N, i), bj = bit_at(b, N, i + 1);
    if (bi == bj) continue;  // ++ and -- are annihilated
    const int flipped = b ^ (1 << (N - i)) ^ (1 << (N - i - 1));
    if (bi == 0) {  // +-
      M(b, b) += -qi;
      M(flipped, b) += 1.0;
    } else {  // -+
      M(b, b) += -q;
      M(flipped, b) += 1.0;
    }
  }
  return M;
}

CMat hamiltonian_spin(int N, const QParam& p) {
  const int dim = require_dim(N);
  CMat H = CMat::Zero(dim, dim);
  for (int i = 1; i <= N - 1; ++i) H += e_matrix(i, N, p);
  return H;
}

Coproduct coproduct_operators(int N, const QParam& p) {
  const int dim = require_dim(N);
  const std::complex<double> q = p.q();
  Coproduct c{CMat::Zero(dim, dim), CMat::Zero(dim, dim), CMat::Zero(dim, dim)};
  for (int b = 0; b < dim; ++b) {
    std::complex<double> kfac = 1.0;
    for (int site = 1; site <= N; ++site) kfac *= (bit_at(b, N, site) ? 1.0 / q : q);
    c.K(b, b) = kfac;
    // Delta(E) = sum_i K^{(i-1)} x E_i x 1; Delta(F) = sum_i 1 x F_i x K^{-(N-i)}
    for (int site = 1; site <= N; ++site) {
      if (bit_at(b, N, site)) {  // E flips v_- -> v_+
        std::complex<double> pref = 1.0;
        for (int s2 = 1; s2 < site; ++s2) pref *= (bit_at(b, N, s2) ? 1.0 / q : q);
        c.E(b ^ (1 << (N - site)), b) += pref;
      } else {  // F flips v_+ -> v_-
        std::complex<double> suf = 1.0;
        for (int s2 = site + 1; s2 <= N; ++s2) suf *= (bit_at(b, N, s2) ? q : 1.0 / q);
        c.F(b | (1 << (N - site)), b) += suf;
      }
    }
  }
  return c;
}

CMat parity_matrix(int N) {
  const int dim = require_dim(N);
  CMat P = CMat::Zero(dim, dim);
  for (int b = 0; b < dim; ++b) {
    int rb = 0;
    for (int site = 1; site <= N; ++site)
      if (bit_at(b, N, site)) rb |= 1 << (site - 1);
    P(rb, b) = 1.0;
  }
  return P;
}

CMat spin_reversal_matrix(int N) {
  const int dim = require_dim(N);
  CMat R = CMat::Zero(dim, dim);
  for (int b = 0; b < dim; ++b) R((~b) & (dim - 1), b) = 1.0;
  return R;
}

std::vector<int> sector_states(int N, int n) {
  std::vector<int> states;
  for (int b = 0; b < (1 << N); ++b)
    if (__builtin_popcount(static_cast<unsigned>(b)) == n) states.push_back(b);
  return states;
}

CMat basis_change(int N, int n, const QParam& p, const Basis& basis) {
  const auto states = sector_states(N, n);
  std::vector<int> sidx(1 << N, -1);
  for (size_t k = 0; k < states.size(); ++k) sidx[states[k]] = static_cast<int>(k);
  const int d = static_cast<int>(states.size());
  if (d != static_cast<int>(basis.size()))
    throw std::invalid_argument("basis_change: basis/sector dimension mismatch");
  const std::complex<double> q = p.q();
  CMat B = CMat::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const CupPattern& pat = basis[j].pattern;
    std::vector<std::pair<int, std::complex<double>>> terms{{0, 1.0}};
    for (auto [pos, s] : pat.defects)
      if (s < 0)
        for (auto& t : terms) t.first |= 1 << (N - 1 - pos);
    for (auto [a, b] : pat.cups) {
      const int bita = 1 << (N - 1 - a), bitb = 1 << (N - 1 - b);
      std::vector<std::pair<int, std::complex<double>>> next;
      next.reserve(2 * terms.size());
      for (auto& [m, c] : terms) {
        next.emplace_back(m | bitb, c);       // v+_a v-_b
        next.emplace_back(m | bita, -q * c);  // -q v-_a v+_b
      }
      terms = std::move(next);
    }
    for (auto& [m, c] : terms) B(sidx[m], j) += c;
  }
  return B;
}

CMat pt_matrix(int N, int n, const QParam& p, const Basis& basis) {
  const auto states = sector_states(N, n);
  std::vector<int> sidx(1 << N, -1);
  for (size_t k = 0; k < states.size(); ++k) sidx[states[k]] = static_cast<int>(k);
  const int d = static_cast<int>(states.size());
  CMat P = CMat::Zero(d, d);
  for (int b : states) {
    int rb = 0;
    for (int site = 1; site <= N; ++site)
      if ((b >> (N - site)) & 1) rb |= 1 << (site - 1);
    P(sidx[rb], sidx[b]) = 1.0;
  }
  const CMat B = basis_change(N, n, p, basis);
  return B.partialPivLu().solve(P * B.conjugate());
}

CMat rt_matrix(int N, int n, const QParam& p, const Basis& basis_n, const Basis& basis_conj) {
  const auto states = sector_states(N, n);
  const auto statesR = sector_states(N, N - n);
  std::vector<int> sidx(1 << N, -1), sidxR(1 << N, -1);
  for (size_t k = 0; k < states.size(); ++k) sidx[states[k]] = static_cast<int>(k);
  for (size_t k = 0; k < statesR.size(); ++k) sidxR[statesR[k]] = static_cast<int>(k);
  CMat R = CMat::Zero(statesR.size(), states.size());
  for (int b : states) R(sidxR[(~b) & ((1 << N) - 1)], sidx[b]) = 1.0;
  const CMat Bn = basis_change(N, n, p, basis_n);
  const CMat BR = basis_change(N, N - n, p, basis_conj);
  return BR.partialPivLu().solve(R * Bn.conjugate());
}

CMat restrict_to_sector(const CMat& op, const std::vector<int>& states) {
  const int d = static_cast<int>(states.size());
  CMat M(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) M(a, b) = op(states[a], states[b]);
  return M;
}

}  // namespace tl
