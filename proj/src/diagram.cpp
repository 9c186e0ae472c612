#include "tl/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tl {

PlanarDiagram identity_diagram(int N) {
  PlanarDiagram d;
  d.N = N;
  d.pair.resize(2 * N);
  for (int j = 0; j < N; ++j) {
    d.pair[j] = N + j;
    d.pair[N + j] = j;
  }
  return d;
}

PlanarDiagram generator_diagram(int i, int N) {
  if (i < 1 || i > N - 1) throw std::out_of_range("generator_diagram: index out of range");
  PlanarDiagram d = identity_diagram(N);
  const int a = i - 1, b = i;
  d.pair[a] = b;
  d.pair[b] = a;
  d.pair[N + a] = N + b;
  d.pair[N + b] = N + a;
  return d;
}

namespace {

// Node encoding for the traced two-layer picture: layer 0 = upper factor,
// layer 1 = lower factor; point index within the layer as in PlanarDiagram.
struct Node {
  int layer, pt;
};

}  // namespace

WeightedDiagram compose(const WeightedDiagram& a, const WeightedDiagram& b) {
  const int N = a.diagram.N;
  if (N != b.diagram.N) throw std::invalid_argument("compose: strand-count mismatch");
  const auto& d1 = a.diagram.pair;
  const auto& d2 = b.diagram.pair;

  WeightedDiagram out;
  out.diagram.N = N;
  out.diagram.pair.assign(2 * N, -1);
  out.loops = a.loops + b.loops;

  // visited[layer][pt]
  std::vector<char> visited(4 * N, 0);
  auto mark = [&](Node n) { visited[n.layer * 2 * N + n.pt] = 1; };
  auto seen = [&](Node n) { return visited[n.layer * 2 * N + n.pt] != 0; };

  // Trace each strand starting from an external boundary point: result top =
  // layer-0 top, result bottom = layer-1 bottom.  Interface: layer-0 bottom
  // point N+j is glued to layer-1 top point j.
  for (int start = 0; start < 2 * N; ++start) {
    if (out.diagram.pair[start] >= 0) continue;
    Node node = (start < N) ? Node{0, start} : Node{1, start};
    int end = -1;
    for (;;) {
      mark(node);
      const auto& d = (node.layer == 0) ? d1 : d2;
      Node next{node.layer, d[node.pt]};
      mark(next);
      if (next.layer == 0 && next.pt < N) { end = next.pt; break; }
      if (next.layer == 1 && next.pt >= N) { end = next.pt; break; }
      // cross the interface
      node = (next.layer == 0) ? Node{1, next.pt - N} : Node{0, next.pt + N};
    }
    out.diagram.pair[start] = end;
    out.diagram.pair[end] = start;
  }

  // Components never touching an external boundary are closed loops.
  for (int layer = 0; layer < 2; ++layer) {
    for (int pt = 0; pt < 2 * N; ++pt) {
      Node node{layer, pt};
      if (seen(node)) continue;
      ++out.loops;
      Node cur = node;
      while (!seen(cur)) {
        mark(cur);
        const auto& d = (cur.layer == 0) ? d1 : d2;
        Node next{cur.layer, d[cur.pt]};
        mark(next);
        cur = (next.layer == 0) ? Node{1, next.pt - N} : Node{0, next.pt + N};
      }
    }
  }
  return out;
}

PlanarDiagram star(const PlanarDiagram& d) {
  PlanarDiagram out;
  out.N = d.N;
  out.pair.resize(2 * d.N);
  auto flip = [&](int p) { return (p < d.N) ? p + d.N : p - d.N; };
  for (int p = 0; p < 2 * d.N; ++p) out.pair[flip(p)] = flip(d.pair[p]);
  return out;
}

Word star_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

WeightedDiagram evaluate_word(const Word& w, int N) {
  WeightedDiagram acc{identity_diagram(N), 0};
  for (int i : w) acc = compose(acc, {generator_diagram(i, N), 0});
  return acc;
}

bool is_noncrossing(const PlanarDiagram& d) {
  const int N = d.N;
  // Map boundary points onto one circle: top 0..N-1 left to right, then bottom
  // right to left, and test the interleaving criterion.
  auto circ = [&](int p) { return (p < N) ? p : 2 * N - 1 - (p - N); };
  for (int p = 0; p < 2 * N; ++p) {
    if (d.pair[p] == p || d.pair[d.pair[p]] != p) return false;
    for (int s = 0; s < 2 * N; ++s) {
      int a = circ(p), b = circ(d.pair[p]), c = circ(s), e = circ(d.pair[s]);
      if (a > b) std::swap(a, b);
      if (c > e) std::swap(c, e);
      const bool c_in = (a < c && c < b), e_in = (a < e && e < b);
      if (c_in != e_in) return false;
    }
  }
  return true;
}

namespace {

// Non-crossing matchings of the given circle positions: match the first point
// to any point an odd distance away, then recurse on the inside and outside.
void enum_matchings(const std::vector<int>& points, std::vector<int>& pair,
                    std::vector<std::vector<int>>& out) {
  if (points.empty()) {
    out.push_back(pair);
    return;
  }
  const int a = points[0];
  for (size_t k = 1; k < points.size(); k += 2) {
    const int b = points[k];
    pair[a] = b;
    pair[b] = a;
    std::vector<int> inside(points.begin() + 1, points.begin() + k);
    std::vector<int> outside(points.begin() + k + 1, points.end());
    std::vector<std::vector<int>> partial;
    std::vector<int> save = pair;
    // enumerate inside matchings, and for each, outside matchings
    std::vector<std::vector<int>> ins;
    enum_matchings(inside, pair, ins);
    for (auto& pi : ins) {
      pair = pi;
      enum_matchings(outside, pair, out);
    }
    pair = save;
  }
}

}  // namespace

std::vector<PlanarDiagram> enumerate_diagrams(int N, int max_n) {
  if (N > max_n) throw std::length_error("enumerate_diagrams: N exceeds limit");
  // circle order: top 0..N-1, then bottom 2N-1 down to N
  std::vector<int> points(2 * N);
  for (int k = 0; k < 2 * N; ++k) points[k] = k;
  std::vector<int> pair(2 * N, -1);
  std::vector<std::vector<int>> circ_matchings;
  enum_matchings(points, pair, circ_matchings);

  auto from_circle = [&](int c) { return (c < N) ? c : N + (2 * N - 1 - c); };
  std::vector<PlanarDiagram> out;
  out.reserve(circ_matchings.size());
  for (const auto& m : circ_matchings) {
    PlanarDiagram d;
    d.N = N;
    d.pair.assign(2 * N, -1);
    for (int c = 0; c < 2 * N; ++c) d.pair[from_circle(c)] = from_circle(m[c]);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Word parse_word(const std::string& s, int N) {
  Word w;
  size_t k = 0;
  auto skip_ws = [&] { while (k < s.size() && std::isspace((unsigned char)s[k])) ++k; };
  skip_ws();
  while (k < s.size()) {
    if (s[k] != 'e') throw std::invalid_argument("parse_word: expected 'e' at position " + std::to_string(k));
    ++k;
    size_t start = k;
    while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
    if (k == start) throw std::invalid_argument("parse_word: missing generator index");
    const int i = std::stoi(s.substr(start, k - start));
    if (i < 1 || i > N - 1) throw std::invalid_argument("parse_word: index out of range 1..N-1");
    w.push_back(i);
    skip_ws();
  }
  return w;
}

std::string render(const PlanarDiagram& d) {
  const int N = d.N;
  const int W = 2 * N - 1;  // strand j at column 2j
  // nesting depth = number of same-boundary arcs strictly containing (a,b)
  auto depth_of = [&](int a, int b) {
    int cnt = 0;
    for (int p = 0; p < 2 * N; ++p) {
      int q = d.pair[p];
      if (p >= q) continue;
      const bool same_side = (p < N) == (a < N) && (q < N) == (a < N);
      if (same_side && p < a && b < q) ++cnt;
    }
    return cnt;
  };

  int max_top = 0, max_bot = 0;
  for (int p = 0; p < 2 * N; ++p) {
    int q = d.pair[p];
    if (p >= q) continue;
    if (q < N) max_top = std::max(max_top, depth_of(p, q) + 1);
    else if (p >= N) max_bot = std::max(max_bot, depth_of(p, q) + 1);
  }
  const int rows = max_top + 1 + max_bot;  // middle row for through lines
  std::vector<std::string> grid(rows, std::string(W, ' '));

  auto draw_arc = [&](int row, int c1, int c2, char l, char r) {
    grid[row][c1] = l;
    grid[row][c2] = r;
    for (int c = c1 + 1; c < c2; ++c)
      if (grid[row][c] == ' ') grid[row][c] = '_';
  };

  for (int p = 0; p < 2 * N; ++p) {
    int q = d.pair[p];
    if (p >= q) continue;
    if (q < N) {  // top arc: nested arcs sit lower (closer to the middle)
      draw_arc(depth_of(p, q), 2 * p, 2 * q, '\\', '/');
    } else if (p >= N) {  // bottom arc
      int row = rows - 1 - depth_of(p, q);
      draw_arc(row, 2 * (p - N), 2 * (q - N), '/', '\\');
    } else {  // through line
      for (int rrow = 0; rrow < rows; ++rrow)
        if (grid[rrow][2 * p] == ' ') grid[rrow][2 * p] = '|';
    }
  }
  std::string out;
  for (const auto& line : grid) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace tl
