#include "tl/cup_basis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tl {

CupPattern omega_pattern(int N, int n) {
  CupPattern p;
  for (int i = 0; i < N; ++i) p.defects.emplace_back(i, i < n ? -1 : +1);
  return p;
}

std::vector<std::vector<int>> shapes_in_rectangle(int N, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // weakly decreasing rows, at most n rows, each <= N-n; drop trailing zeros
  auto rec = [&](auto&& self, int row, int prev) -> void {
    if (row == n) {
      std::vector<int> s;
      for (int x : cur)
        if (x > 0) s.push_back(x);
      out.push_back(s);
      return;
    }
    for (int l = 0; l <= prev; ++l) {
      cur.push_back(l);
      self(self, row + 1, l);
      cur.pop_back();
    }
  };
  rec(rec, 0, N - n);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    return sa != sb ? sa < sb : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word tableau_to_word(const Tableau& t) {
  const int n = t.n;
  std::vector<std::vector<int>> rows;
  for (size_t k = 0; k < t.shape.size(); ++k) {
    std::vector<int> row;
    for (int j = 0; j < t.shape[k]; ++j) row.push_back(n - static_cast<int>(k) + j);
    rows.push_back(row);
  }
  Word w;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) w.push_back(*jt);
  return w;
}

GenAction apply_generator(const CupPattern& pat, int i, int N) {
  if (i < 1 || i > N - 1) throw std::out_of_range("apply_generator: index");
  const int a = i - 1, b = i;
  int partner_a = -1, partner_b = -1;
  for (auto [x, y] : pat.cups) {
    if (x == a) partner_a = y;
    if (y == a) partner_a = x;
    if (x == b) partner_b = y;
    if (y == b) partner_b = x;
  }
  auto sign_at = [&](int pos) {
    for (auto [p, s] : pat.defects)
      if (p == pos) return s;
    throw std::logic_error("apply_generator: defect lookup");
  };
  auto sorted = [](CupPattern q) {
    std::sort(q.cups.begin(), q.cups.end());
    std::sort(q.defects.begin(), q.defects.end());
    return q;
  };

  if (partner_a < 0 && partner_b < 0) {
    // both defects: cap kills equal signs, (-,+) turns into a cup
    const int sa = sign_at(a), sb = sign_at(b);
    if (sa == sb) return {GenAction::zero, {}};
    // sa = -1, sb = +1 for every valid basis pattern (minus defects are left)
    CupPattern out = pat;
    out.cups.emplace_back(a, b);
    std::erase_if(out.defects, [&](auto& d) { return d.first == a || d.first == b; });
    return {GenAction::unit, sorted(std::move(out))};
  }
  if (partner_a == b) {
    // cap closes the cup: same pattern, one loop => weight -(q+q^{-1})
    return {GenAction::loop, pat};
  }
  CupPattern out = pat;
  std::erase_if(out.cups, [&](auto& c) {
    return c.first == a || c.second == a || c.first == b || c.second == b;
  });
  if (partner_a >= 0 && partner_b >= 0) {
    // two distinct cups merge
    out.cups.emplace_back(std::min(partner_a, partner_b), std::max(partner_a, partner_b));
  } else if (partner_a >= 0) {
    // defect label at b migrates to the far end of a's cup
    const int s = sign_at(b);
    std::erase_if(out.defects, [&](auto& d) { return d.first == b; });
    out.defects.emplace_back(partner_a, s);
  } else {
    const int s = sign_at(a);
    std::erase_if(out.defects, [&](auto& d) { return d.first == a; });
    out.defects.emplace_back(partner_b, s);
  }
  out.cups.emplace_back(a, b);
  return {GenAction::unit, sorted(std::move(out))};
}

Basis enumerate_basis(int N, int n) {
  Basis basis;
  for (const auto& sh : shapes_in_rectangle(N, n)) {
    CupBasisVector v;
    v.tableau = {n, sh};
    v.word = tableau_to_word(v.tableau);
    CupPattern pat = omega_pattern(N, n);
    for (auto it = v.word.rbegin(); it != v.word.rend(); ++it) {
      GenAction act = apply_generator(pat, *it, N);
      if (act.kind != GenAction::unit)
        throw std::logic_error("enumerate_basis: tableau word did not act freely");
      pat = act.pattern;
    }
    v.pattern = std::move(pat);
    basis.push_back(std::move(v));
  }
  return basis;
}

Eigen::MatrixXd generator_action(int i, int N, int n, const Basis& basis, const QParam& p) {
  std::map<CupPattern, int> idx;
  for (size_t k = 0; k < basis.size(); ++k) idx[basis[k].pattern] = static_cast<int>(k);
  const int m = static_cast<int>(basis.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
  const double delta = loop_weight(p);
  for (int j = 0; j < m; ++j) {
    GenAction act = apply_generator(basis[j].pattern, i, N);
    if (act.kind == GenAction::zero) continue;
    auto it = idx.find(act.pattern);
    if (it == idx.end()) throw std::logic_error("generator_action: image not a basis pattern");
    M(it->second, j) = (act.kind == GenAction::loop) ? delta : 1.0;
  }
  (void)n;
  return M;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> qgroup_action(
    int N, int n, const Basis& basis_n, const Basis* basis_lo, const Basis* basis_hi,
    const QParam& p) {
  (void)N;
  (void)n;
  std::map<CupPattern, int> idx_lo, idx_hi;
  if (basis_lo)
    for (size_t k = 0; k < basis_lo->size(); ++k) idx_lo[(*basis_lo)[k].pattern] = static_cast<int>(k);
  if (basis_hi)
    for (size_t k = 0; k < basis_hi->size(); ++k) idx_hi[(*basis_hi)[k].pattern] = static_cast<int>(k);
  const int cols = static_cast<int>(basis_n.size());
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(basis_lo ? basis_lo->size() : 0, cols);
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(basis_hi ? basis_hi->size() : 0, cols);

  auto sorted = [](CupPattern q) {
    std::sort(q.cups.begin(), q.cups.end());
    std::sort(q.defects.begin(), q.defects.end());
    return q;
  };

  for (int j = 0; j < cols; ++j) {
    const CupPattern& pat = basis_n[j].pattern;
    std::vector<int> minus, plus;
    for (auto [pos, s] : pat.defects) (s < 0 ? minus : plus).push_back(pos);
    const int km = static_cast<int>(minus.size()), kp = static_cast<int>(plus.size());

    if (basis_lo) {
      for (int m = 1; m <= km; ++m) {
        CupPattern out = pat;
        if (m < km) {  // join the m-th and (m+1)-th down-spin defects
          const int a = minus[m - 1], b = minus[m];
          out.cups.emplace_back(a, b);
          std::erase_if(out.defects, [&](auto& d) { return d.first == a || d.first == b; });
        } else {  // flip the rightmost down spin
          for (auto& dft : out.defects)
            if (dft.first == minus[km - 1]) dft.second = +1;
        }
        auto it = idx_lo.find(sorted(std::move(out)));
        if (it == idx_lo.end()) throw std::logic_error("qgroup_action: E image not in basis");
        E(it->second, j) += quantum_integer(m, p);
      }
    }
    if (basis_hi) {
      for (int m = 1; m <= kp; ++m) {
        CupPattern out = pat;
        if (m < kp) {  // m-th and (m+1)-th up spins counted from the right
          const int b = plus[kp - m], a = plus[kp - m - 1];
          out.cups.emplace_back(a, b);
          std::erase_if(out.defects, [&](auto& d) { return d.first == a || d.first == b; });
        } else {  // flip the leftmost up spin
          for (auto& dft : out.defects)
            if (dft.first == plus[0]) dft.second = -1;
        }
        auto it = idx_hi.find(sorted(std::move(out)));
        if (it == idx_hi.end()) throw std::logic_error("qgroup_action: F image not in basis");
        F(it->second, j) += quantum_integer(m, p);
      }
    }
  }
  return {E, F};
}

Eigen::MatrixXd hamiltonian_t_basis(int N, int n, const Basis& basis, const QParam& p) {
  const int m = static_cast<int>(basis.size());
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(m, m);
  for (int i = 1; i <= N - 1; ++i) H += generator_action(i, N, n, basis, p);
  return H;
}

std::string render_pattern(const CupPattern& pat, int N) {
  std::string s(N, '?');
  for (auto [a, b] : pat.cups) {
    s[a] = '(';
    s[b] = ')';
  }
  for (auto [p, sg] : pat.defects) s[p] = (sg > 0) ? '+' : '-';
  return s;
}

std::string render_tableau(const Tableau& t) {
  std::string out;
  if (t.shape.empty()) return "(empty)\n";
  for (size_t k = 0; k < t.shape.size(); ++k) {
    for (int j = 0; j < t.shape[k]; ++j) out += "[" + std::to_string(t.n - static_cast<int>(k) + j) + "]";
    out += '\n';
  }
  return out;
}

}  // namespace tl
