#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <vector>

#include "tl/gram.hpp"
#include "tl/spin_chain.hpp"

using namespace tl;
using cd = std::complex<double>;

namespace {

// Independent oracle for the Gram blocks: the unique solution of the linear
// system {G_n eps_i = eps_i^t G_n, G_{n-1} E = F^t G_n, pi^dag G_n pi = G_n}
// with the normalization G^(n)_{11} = omega_n(1).  Solved as a dense least
// squares problem over the packed symmetric blocks; the residual must vanish.
struct GramOracle {
  std::vector<Eigen::MatrixXd> G;
  double residual = 0;
};

GramOracle solve_gram_oracle(int N, double r) {
  const QParam p{r, N};
  std::vector<Basis> bases(N + 1);
  for (int n = 0; n <= N; ++n) bases[n] = enumerate_basis(N, n);

  std::vector<std::vector<Eigen::MatrixXd>> eps(N + 1);
  std::vector<Eigen::MatrixXd> E(N + 1), Fprev(N + 1);
  std::vector<CMat> pi(N + 1);
  std::vector<int> dims(N + 1), offs(N + 2, 0);
  for (int n = 0; n <= N; ++n) {
    dims[n] = static_cast<int>(bases[n].size());
    offs[n + 1] = offs[n] + dims[n] * (dims[n] + 1) / 2;
    for (int i = 1; i <= N - 1; ++i) eps[n].push_back(generator_action(i, N, n, bases[n], p));
    if (n > 0) {
      const Basis* hi = (n < N) ? &bases[n + 1] : nullptr;
      E[n] = qgroup_action(N, n, bases[n], &bases[n - 1], hi, p).first;
      const Basis* lolo = (n >= 2) ? &bases[n - 2] : nullptr;
      Fprev[n] = qgroup_action(N, n - 1, bases[n - 1], lolo, &bases[n], p).second;
    }
    pi[n] = pt_matrix(N, n, p, bases[n]);
  }
  const int tot = offs[N + 1];

  auto unpack = [&](const Eigen::VectorXd& x) {
    std::vector<Eigen::MatrixXd> G(N + 1);
    for (int n = 0; n <= N; ++n) {
      G[n].resize(dims[n], dims[n]);
      int k = offs[n];
      for (int a = 0; a < dims[n]; ++a)
        for (int b = a; b < dims[n]; ++b) {
          G[n](a, b) = G[n](b, a) = x(k);
          ++k;
        }
    }
    return G;
  };
  auto residuals = [&](const std::vector<Eigen::MatrixXd>& G) {
    std::vector<double> res;
    for (int n = 0; n <= N; ++n) {
      for (const auto& M : eps[n]) {
        const Eigen::MatrixXd R = G[n] * M - M.transpose() * G[n];
        res.insert(res.end(), R.data(), R.data() + R.size());
      }
      if (n > 0) {
        const Eigen::MatrixXd R = G[n - 1] * E[n] - Fprev[n].transpose() * G[n];
        res.insert(res.end(), R.data(), R.data() + R.size());
      }
      const CMat R = pi[n].adjoint() * G[n].cast<cd>() * pi[n] - G[n].cast<cd>();
      for (int k = 0; k < R.size(); ++k) {
        res.push_back(R.data()[k].real());
        res.push_back(R.data()[k].imag());
      }
    }
    return res;
  };

  const int nrows = static_cast<int>(residuals(unpack(Eigen::VectorXd::Zero(tot))).size());
  Eigen::MatrixXd A(nrows + N + 1, tot);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(nrows + N + 1);
  for (int k = 0; k < tot; ++k) {
    const auto col = residuals(unpack(Eigen::VectorXd::Unit(tot, k)));
    for (int row = 0; row < nrows; ++row) A(row, k) = col[row];
    for (int n = 0; n <= N; ++n) A(nrows + n, k) = 0.0;
  }
  for (int n = 0; n <= N; ++n) {  // normalization: G^(n)_{11} = omega_n(1)
    A(nrows + n, offs[n]) = 1.0;
    b(nrows + n) = half_power_sum(0.5 * N - n, p) / half_power_sum(0.5 * N, p);
  }
  GramOracle out;
  const Eigen::VectorXd x = A.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
  out.residual = (A * x - b).norm();
  out.G = unpack(x);
  return out;
}

}  // namespace

TEST_CASE("orientation counting on reference diagrams") {
  const int N = 5;
  for (int n = 0; n <= N; ++n) {
    auto oc = orient_and_count({identity_diagram(N), 0}, n);
    CHECK(oc.x == 0);
    CHECK(oc.y == 0);
    CHECK(oc.z == 0);
  }
  auto e1 = orient_and_count({generator_diagram(1, 2), 0}, 1);
  CHECK(e1.x == 1);
  CHECK(e1.z == 0);
  auto b = orient_and_count(evaluate_word({3, 2, 1, 4, 3, 2}, 5), 2);
  CHECK(b.z > 0);
}

TEST_CASE("omega on small reference elements") {
  const QParam p2{2.9, 2};
  CHECK(omega(evaluate_word({1}, 2), 1, p2) == doctest::Approx(-1.0));
  CHECK(omega(evaluate_word({1, 1}, 2), 1, p2) == doctest::Approx(-loop_weight(p2)));
  // identity: omega_n(1) = c_{N/2-n}/c_{N/2}
  for (int n = 0; n <= 5; ++n) {
    const QParam p{6.3, 5};
    CHECK(omega(evaluate_word({}, 5), n, p) ==
          doctest::Approx(half_power_sum(2.5 - n, p) / half_power_sum(2.5, p)));
  }
}

TEST_CASE("omega is star-invariant on sampled words") {
  const QParam p{6.1, 5};
  const std::vector<Word> words{{1}, {2, 1}, {1, 2, 3}, {2, 1, 4, 3, 2}, {3, 2, 3}, {4, 4}};
  for (const auto& w : words) {
    auto d = evaluate_word(w, 5);
    auto ds = evaluate_word(star_word(w), 5);
    for (int n = 0; n <= 5; ++n)
      CHECK(omega(d, n, p) == doctest::Approx(omega(ds, n, p)));
  }
}

TEST_CASE("omega is constant on algebra-equal words") {
  // e2 e3 e2 = e2, and e1 e2 e3 e2 = e1 e2 as diagrams, hence under omega
  const QParam p{6.0, 5};
  auto lhs = evaluate_word({1, 2, 3, 2}, 5);
  auto rhs = evaluate_word({1, 2}, 5);
  CHECK(lhs.diagram == rhs.diagram);
  CHECK(lhs.loops == rhs.loops);
  for (int n = 0; n <= 5; ++n)
    CHECK(omega(lhs, n, p) == doctest::Approx(omega(rhs, n, p)));
  // the (2,2)-tableau word evaluates to 1 in every admissible sector-2 metric
  CHECK(omega(evaluate_word({2, 1, 3, 2}, 5), 2, p) == doctest::Approx(1.0));
}

TEST_CASE("N=2 Gram blocks in closed form") {
  const QParam p{2.5, 2};
  const double c = -loop_weight(p);
  const auto b1 = enumerate_basis(2, 1);
  const Eigen::MatrixXd G = gram_matrix(2, 1, p, b1);
  Eigen::MatrixXd expect(2, 2);
  expect << 2.0 / c, -1.0, -1.0, c;
  CHECK((G - expect).norm() < 1e-12);
  CHECK(G.determinant() == doctest::Approx(1.0));
  CHECK(gram_matrix(2, 0, p, enumerate_basis(2, 0))(0, 0) == doctest::Approx(1.0));
  CHECK(gram_matrix(2, 2, p, enumerate_basis(2, 2))(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("gram matrix matches the intertwiner-system oracle") {
  for (auto [N, r] : std::vector<std::pair<int, double>>{{3, 4.2}, {4, 5.5}, {5, 6.0}}) {
    const auto oracle = solve_gram_oracle(N, r);
    CHECK(oracle.residual < 1e-8);
    const QParam p{r, N};
    for (int n = 0; n <= N; ++n) {
      const auto basis = enumerate_basis(N, n);
      const Eigen::MatrixXd G = gram_matrix(N, n, p, basis);
      CHECK((G - oracle.G[n]).cwiseAbs().maxCoeff() < 1e-7);
    }
  }
}

TEST_CASE("positivity, symmetry and per-block determinant one") {
  for (auto [N, r] : std::vector<std::pair<int, double>>{{4, 4.7}, {5, 7.3}, {6, 12.0}}) {
    const QParam p{r, N};
    for (int n = 0; n <= N; ++n) {
      const auto basis = enumerate_basis(N, n);
      const Eigen::MatrixXd G = gram_matrix(N, n, p, basis);
      CHECK((G - G.transpose()).norm() < 1e-12);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
      CHECK(es.eigenvalues().minCoeff() > 0);
      CHECK(G.determinant() == doctest::Approx(1.0).epsilon(1e-7));
    }
  }
}

TEST_CASE("W_max fast path agrees with the full Gram matrix") {
  for (auto [N, r] : std::vector<std::pair<int, double>>{{4, 5.1}, {5, 6.4}, {6, 7.7}, {7, 8.0}}) {
    const QParam p{r, N};
    const int n = N / 2;
    const auto basis = enumerate_basis(N, n);
    const auto idx = wmax_indices(basis, N);
    const Eigen::MatrixXd W = gram_wmax(N, p, basis);
    const Eigen::MatrixXd G = gram_matrix(N, n, p, basis);
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j)
        CHECK(W(i, j) == doctest::Approx(G(idx[i], idx[j])).epsilon(1e-10));
    // diagonal: self-gluing closes one loop per cup
    const double c = -loop_weight(p);
    for (size_t i = 0; i < idx.size(); ++i)
      CHECK(std::abs(W(i, i)) == doctest::Approx(std::pow(c, n)));
  }
}

TEST_CASE("W_max is TL-invariant") {
  const int N = 6;
  const QParam p{7.5, N};
  const auto basis = enumerate_basis(N, N / 2);
  const auto idx = wmax_indices(basis, N);
  std::vector<char> in_wmax(basis.size(), 0);
  for (int k : idx) in_wmax[k] = 1;
  for (int i = 1; i <= N - 1; ++i) {
    const Eigen::MatrixXd eps = generator_action(i, N, N / 2, basis, p);
    for (int j : idx)
      for (int k = 0; k < eps.rows(); ++k)
        if (eps(k, j) != 0.0) CHECK(in_wmax[k] == 1);
  }
}

TEST_CASE("glue loop counts") {
  const int N = 7;
  const auto basis = enumerate_basis(N, 3);
  const CupPattern* a = nullptr;
  const CupPattern* b = nullptr;
  for (const auto& v : basis) {
    if (v.word == Word{1, 3, 2, 5, 4, 3}) a = &v.pattern;        // ()()()+
    if (v.word == Word{1, 3, 2, 6, 5, 4, 3}) b = &v.pattern;     // ()()+()
  }
  REQUIRE(a);
  REQUIRE(b);
  CHECK(glue_loops(*a, *a, N) == 3);
  CHECK(glue_loops(*a, *b, N) == 2);
}
