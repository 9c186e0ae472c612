#include "tl/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tl {

double scaled_residual(const Eigen::MatrixXd& L, const Eigen::MatrixXd& R) {
  const double scale = std::max({L.norm(), R.norm(), 1.0});
  return (L - R).norm() / scale;
}

double scaled_residual(const CMat& L, const CMat& R) {
  const double scale = std::max({L.norm(), R.norm(), 1.0});
  return (L - R).norm() / scale;
}

VerificationReport verify_conjecture(int N, double r, double tol, bool with_eta) {
  if (r <= static_cast<double>(N)) throw std::invalid_argument("verify_conjecture: requires r > N");
  const QParam p{r, N, tol};
  VerificationReport rep;
  rep.N = N;
  rep.r = r;
  rep.tol = tol;

  std::vector<Basis> bases(N + 1);
  std::vector<Eigen::MatrixXd> G(N + 1);
  for (int n = 0; n <= N; ++n) {
    bases[n] = enumerate_basis(N, n);
    G[n] = gram_matrix(N, n, p, bases[n]);
  }

  for (int n = 0; n <= N; ++n) {
    SectorReport s;
    s.n = n;
    s.dim = static_cast<int>(bases[n].size());
    s.symmetry = scaled_residual(G[n], G[n].transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (G[n] + G[n].transpose()));
    s.min_eig = es.eigenvalues().minCoeff();
    s.det = G[n].determinant();

    for (int i = 1; i <= N - 1; ++i) {
      const Eigen::MatrixXd eps = generator_action(i, N, n, bases[n], p);
      s.tl_intertwine = std::max(
          s.tl_intertwine,
          scaled_residual(Eigen::MatrixXd(G[n] * eps), Eigen::MatrixXd(eps.transpose() * G[n])));
    }
    if (n > 0) {
      const Basis* lo = &bases[n - 1];
      const Basis* hi = (n < N) ? &bases[n + 1] : nullptr;
      const Eigen::MatrixXd E = qgroup_action(N, n, bases[n], lo, hi, p).first;
      const Basis* lolo = (n >= 2) ? &bases[n - 2] : nullptr;
      const Eigen::MatrixXd Fprev =
          qgroup_action(N, n - 1, bases[n - 1], lolo, &bases[n], p).second;
      s.qg_intertwine = scaled_residual(Eigen::MatrixXd(G[n - 1] * E),
                                        Eigen::MatrixXd(Fprev.transpose() * G[n]));
    }
    const Eigen::MatrixXd Ht = hamiltonian_t_basis(N, n, bases[n], p);
    s.h_intertwine = scaled_residual(Eigen::MatrixXd(G[n] * Ht),
                                     Eigen::MatrixXd(Ht.transpose() * G[n]));

    const CMat pi = pt_matrix(N, n, p, bases[n]);
    const CMat Gc = G[n].cast<std::complex<double>>();
    s.pt = scaled_residual(CMat(pi.adjoint() * Gc * pi), Gc);
    const CMat rho = rt_matrix(N, n, p, bases[n], bases[N - n]);
    const CMat Gr = G[N - n].cast<std::complex<double>>();
    s.rt = scaled_residual(CMat(rho.adjoint() * Gr * rho), Gc);
    rep.sectors.push_back(s);
  }

  bool pass = true;
  for (const auto& s : rep.sectors) {
    pass = pass && s.symmetry < tol && s.min_eig > 0 && s.tl_intertwine < tol &&
           s.qg_intertwine < tol && s.h_intertwine < tol && s.pt < tol && s.rt < tol;
  }

  if (with_eta) {
    const CMat eta = reconstruct_eta(N, p);
    rep.eta.hermiticity = scaled_residual(eta, CMat(eta.adjoint()));
    Eigen::SelfAdjointEigenSolver<CMat> es(CMat(0.5 * (eta + eta.adjoint())));
    rep.eta.min_eig = es.eigenvalues().minCoeff();
    rep.eta.det_deviation = std::abs(eta.determinant() - std::complex<double>(1.0));
    const CMat H = hamiltonian_spin(N, p);
    rep.eta.h_quasi_hermitian = scaled_residual(CMat(eta * H), CMat(H.adjoint() * eta));
    const CMat etainv = eta.inverse();
    const CMat P = parity_matrix(N), R = spin_reversal_matrix(N);
    rep.eta.pt = scaled_residual(CMat(P * eta * P), etainv);
    rep.eta.rt = scaled_residual(CMat(R * eta * R), etainv);
    rep.eta.conj_inverse = scaled_residual(CMat(eta.conjugate()), etainv);
    // round trip: <t_i, eta t_j> = G_ij per sector
    double rt_res = 0;
    for (int n = 0; n <= N; ++n) {
      const auto states = sector_states(N, n);
      const CMat B = basis_change(N, n, p, bases[n]);
      const CMat eta_n = restrict_to_sector(eta, states);
      rt_res = std::max(rt_res, scaled_residual(CMat(B.adjoint() * eta_n * B),
                                                G[n].cast<std::complex<double>>()));
    }
    rep.eta.gram_roundtrip = rt_res;

    rep.spectrum = spectrum_check(N, p);
    const double eta_tol = std::max(tol, 1e-8);
    pass = pass && rep.eta.hermiticity < eta_tol && rep.eta.min_eig > 0 &&
           rep.eta.h_quasi_hermitian < eta_tol && rep.eta.pt < eta_tol &&
           rep.eta.rt < eta_tol && rep.eta.conj_inverse < eta_tol &&
           rep.eta.det_deviation < 1e-6 && rep.eta.gram_roundtrip < eta_tol &&
           rep.spectrum.max_imag < tol && rep.spectrum.sector_mismatch < eta_tol;
  }
  rep.pass = pass;
  return rep;
}

CMat reconstruct_eta(int N, const QParam& p) {
  const int dim = 1 << N;
  CMat eta = CMat::Zero(dim, dim);
  for (int n = 0; n <= N; ++n) {
    const Basis basis = enumerate_basis(N, n);
    const Eigen::MatrixXd G = gram_matrix(N, n, p, basis);
    const CMat B = basis_change(N, n, p, basis);
    const CMat Binv = B.inverse();
    const CMat eta_n = Binv.adjoint() * G.cast<std::complex<double>>() * Binv;
    const auto states = sector_states(N, n);
    for (size_t a = 0; a < states.size(); ++a)
      for (size_t b = 0; b < states.size(); ++b) eta(states[a], states[b]) = eta_n(a, b);
  }
  return eta;
}

SpectrumReport spectrum_check(int N, const QParam& p) {
  SpectrumReport rep;
  const CMat H = hamiltonian_spin(N, p);
  Eigen::ComplexEigenSolver<CMat> es(H, false);
  std::vector<double> spin_eigs;
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    rep.max_imag = std::max(rep.max_imag, std::abs(es.eigenvalues()[k].imag()));
    spin_eigs.push_back(es.eigenvalues()[k].real());
  }
  std::sort(spin_eigs.begin(), spin_eigs.end());
  rep.eigenvalues = spin_eigs;

  // per-sector: eigenvalues of the t-basis Hamiltonian must match the spin
  // Hamiltonian restricted to the same sector, as multisets
  std::vector<double> t_eigs, sector_eigs;
  for (int n = 0; n <= N; ++n) {
    const Basis basis = enumerate_basis(N, n);
    const Eigen::MatrixXd Ht = hamiltonian_t_basis(N, n, basis, p);
    Eigen::EigenSolver<Eigen::MatrixXd> est(Ht, false);
    for (int k = 0; k < est.eigenvalues().size(); ++k) {
      rep.max_imag = std::max(rep.max_imag, std::abs(est.eigenvalues()[k].imag()));
      t_eigs.push_back(est.eigenvalues()[k].real());
    }
    const CMat Hn = restrict_to_sector(H, sector_states(N, n));
    Eigen::ComplexEigenSolver<CMat> esn(Hn, false);
    for (int k = 0; k < esn.eigenvalues().size(); ++k)
      sector_eigs.push_back(esn.eigenvalues()[k].real());
  }
  std::sort(t_eigs.begin(), t_eigs.end());
  std::sort(sector_eigs.begin(), sector_eigs.end());
  double dist = 0;
  for (size_t k = 0; k < t_eigs.size(); ++k)
    dist = std::max(dist, std::abs(t_eigs[k] - sector_eigs[k]));
  rep.sector_mismatch = dist;
  return rep;
}

CMat transfer_matrix(std::complex<double> x, int N, const QParam& p) {
  const int M = N;           // physical sites 1..M
  const int Next = M + 1;    // auxiliary space as the last tensor factor
  if (Next > spin_max_n) throw std::length_error("transfer_matrix: N too large");
  const std::complex<double> q = p.q();
  const std::complex<double> denom = x * q - (1.0 / x) * (1.0 / q);
  if (std::abs(denom) < p.tol) throw std::domain_error("transfer_matrix: singular spectral parameter");
  const std::complex<double> coef = (x - 1.0 / x) / denom;

  const QParam pext{p.r, Next, p.tol};
  const int dim = 1 << Next;
  auto Rmat = [&](int i) {
    CMat R = CMat::Identity(dim, dim);
    R += coef * e_matrix(i, Next, pext);
    return R;
  };
  // K on the auxiliary (last) factor: diag(q^{-1}, q) with v_+ -> q^{-1}
  CMat T = CMat::Zero(dim, dim);
  for (int b = 0; b < dim; ++b) T(b, b) = (b & 1) ? q : 1.0 / q;
  // R_{M,0} R_{M-1,M} ... R_{2,3} R_{1,2}^2 R_{2,3} ... R_{M-1,M} R_{M,0}
  std::vector<int> bonds;
  bonds.push_back(M);  // bond (M, aux)
  for (int i = M - 1; i >= 2; --i) bonds.push_back(i);
  bonds.push_back(1);
  bonds.push_back(1);
  for (int i = 2; i <= M - 1; ++i) bonds.push_back(i);
  bonds.push_back(M);
  for (int i : bonds) T *= Rmat(i);

  // partial trace over the auxiliary factor
  const int dphys = 1 << M;
  CMat t = CMat::Zero(dphys, dphys);
  for (int a = 0; a < 2; ++a)
    for (int row = 0; row < dphys; ++row)
      for (int col = 0; col < dphys; ++col) t(row, col) += T(2 * row + a, 2 * col + a);
  return t;
}

CMat transfer_matrix_circle(double theta, int N, const QParam& p) {
  return transfer_matrix(std::complex<double>(std::cos(theta), std::sin(theta)), N, p);
}

std::string report_to_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["params"] = {{"N", rep.N}, {"r", rep.r}, {"tol", rep.tol}};
  j["sectors"] = nlohmann::json::array();
  for (const auto& s : rep.sectors) {
    j["sectors"].push_back({
        {"n", s.n},
        {"dim", s.dim},
        {"residuals",
         {{"symmetry", s.symmetry},
          {"tl_intertwine", s.tl_intertwine},
          {"qg_intertwine", s.qg_intertwine},
          {"h_intertwine", s.h_intertwine},
          {"pt", s.pt},
          {"rt", s.rt}}},
        {"min_eig", s.min_eig},
        {"det", s.det},
    });
  }
  j["eta"] = {{"hermiticity", rep.eta.hermiticity},
              {"min_eig", rep.eta.min_eig},
              {"det_deviation", rep.eta.det_deviation},
              {"h_quasi_hermitian", rep.eta.h_quasi_hermitian},
              {"pt", rep.eta.pt},
              {"rt", rep.eta.rt},
              {"conj_inverse", rep.eta.conj_inverse},
              {"gram_roundtrip", rep.eta.gram_roundtrip}};
  j["spectrum"] = {{"max_imag", rep.spectrum.max_imag},
                   {"sector_mismatch", rep.spectrum.sector_mismatch}};
  j["pass"] = rep.pass;
  return j.dump(2);
}

}  // namespace tl
