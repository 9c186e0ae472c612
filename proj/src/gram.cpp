#include "tl/gram.hpp"

#include <cmath>
#include <stdexcept>

namespace tl {

OrientationCount orient_and_count(const WeightedDiagram& wd, int n) {
  const PlanarDiagram& d = wd.diagram;
  const int N = d.N;
  auto sign = [&](int strand) { return strand < n ? -1 : +1; };
  OrientationCount oc;
  oc.y = wd.loops;
  std::vector<char> seen(2 * N, 0);
  for (int p = 0; p < 2 * N; ++p) {
    if (seen[p]) continue;
    const int q = d.pair[p];
    seen[p] = seen[q] = 1;
    if (p < N && q < N) {  // top arc
      const int a = std::min(p, q), b = std::max(p, q);
      if (sign(a) == sign(b)) ++oc.z;
      else if (sign(a) == -1) ++oc.x;  // (-,+) left to right: anticlockwise
    } else if (p >= N && q >= N) {  // bottom arc
      const int a = std::min(p, q) - N, b = std::max(p, q) - N;
      if (sign(a) == sign(b)) ++oc.z;
      else if (sign(a) == +1) ++oc.x;  // (+,-) left to right: anticlockwise
    } else {  // through line
      const int t = (p < N) ? p : q;
      const int b = ((p < N) ? q : p) - N;
      if (sign(t) != sign(b)) ++oc.z;
    }
  }
  return oc;
}

double omega(const WeightedDiagram& d, int n, const QParam& p) {
  const OrientationCount oc = orient_and_count(d, n);
  if (oc.z > 0) return 0.0;
  const double N2 = 0.5 * p.N;
  const double sgn = ((oc.x + oc.y) % 2 == 0) ? 1.0 : -1.0;
  return sgn * std::pow(-loop_weight(p), oc.y) * half_power_sum(N2 - n, p) /
         half_power_sum(N2 - oc.x, p);
}

Eigen::MatrixXd gram_matrix(int N, int n, const QParam& p, const Basis& basis) {
  const int m = static_cast<int>(basis.size());
  Eigen::MatrixXd G(m, m);
  for (int i = 0; i < m; ++i) {
    const Word wi = star_word(basis[i].word);
    for (int j = 0; j < m; ++j) {
      Word w = wi;
      w.insert(w.end(), basis[j].word.begin(), basis[j].word.end());
      G(i, j) = omega(evaluate_word(w, N), n, p);
    }
  }
  return G;
}

std::vector<int> wmax_indices(const Basis& basis, int N) {
  const size_t maxcups = static_cast<size_t>(N / 2);
  std::vector<int> idx;
  for (size_t k = 0; k < basis.size(); ++k)
    if (basis[k].pattern.cups.size() == maxcups) idx.push_back(static_cast<int>(k));
  return idx;
}

int glue_loops(const CupPattern& a, const CupPattern& b, int N) {
  // Flip a at the horizontal axis and glue onto b: arcs of a and arcs of b
  // alternate; components containing a defect are open strands, the rest are
  // closed loops.
  std::vector<int> pa(N, -1), pb(N, -1);
  for (auto [x, y] : a.cups) { pa[x] = y; pa[y] = x; }
  for (auto [x, y] : b.cups) { pb[x] = y; pb[y] = x; }
  std::vector<char> seen(N, 0);
  int loops = 0;
  for (int s = 0; s < N; ++s) {
    if (seen[s] || pa[s] < 0) continue;
    // walk the alternating cycle/path through s
    int cur = s;
    bool closed = true;
    bool use_a = true;
    while (true) {
      seen[cur] = 1;
      const int next = use_a ? pa[cur] : pb[cur];
      if (next < 0) { closed = false; break; }  // hit a defect of the other pattern
      seen[next] = 1;
      cur = next;
      use_a = !use_a;
      if (cur == s && use_a) break;  // back at start about to reuse the first arc
    }
    if (closed) ++loops;
  }
  return loops;
}

Eigen::MatrixXd gram_wmax(int N, const QParam& p, const Basis& basis) {
  const int n = N / 2;
  const auto idx = wmax_indices(basis, N);
  const int m = static_cast<int>(idx.size());
  Eigen::MatrixXd G(m, m);
  const double sgn_n = (n % 2 == 0) ? 1.0 : -1.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int y = glue_loops(basis[idx[i]].pattern, basis[idx[j]].pattern, N);
      G(i, j) = sgn_n * std::pow(loop_weight(p), y);
    }
  return G;
}

}  // namespace tl
