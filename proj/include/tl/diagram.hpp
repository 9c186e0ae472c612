#pragma once
// Temperley-Lieb algebra as planar (Kauffman) diagrams: non-crossing perfect
// matchings of N top + N bottom boundary points.  Multiplication is vertical
// stacking (left factor on top); closed loops created at the interface are
// counted, not weighted -- the weight -(q+q^{-1}) per loop is applied by the
// functional/representation layers.

#include <string>
#include <vector>

namespace tl {

// Boundary points 0..N-1 on top (left to right), N..2N-1 on bottom.
// `pair` is a fixed-point-free involution on the 2N points.
struct PlanarDiagram {
  int N = 0;
  std::vector<int> pair;

  bool operator==(const PlanarDiagram& o) const { return N == o.N && pair == o.pair; }
  bool operator<(const PlanarDiagram& o) const { return pair < o.pair; }
};

struct WeightedDiagram {
  PlanarDiagram diagram;
  int loops = 0;  // closed loops removed during composition
};

// Generator letters are 1-based: a word is a sequence over {1,..,N-1}.
using Word = std::vector<int>;

PlanarDiagram identity_diagram(int N);
PlanarDiagram generator_diagram(int i, int N);  // e_i, 1 <= i <= N-1

// Stack a above b, trace strands through the glued boundary.
// loops = a.loops + b.loops + (closed loops at the interface).
WeightedDiagram compose(const WeightedDiagram& a, const WeightedDiagram& b);

// Flip at the horizontal axis (the * involution on diagrams).
PlanarDiagram star(const PlanarDiagram& d);

// (e_{i1}...e_{ik})* = e_{ik}...e_{i1}
Word star_word(const Word& w);

// Left-to-right composition of generator diagrams; empty word = identity.
WeightedDiagram evaluate_word(const Word& w, int N);

// All non-crossing perfect matchings of the 2N boundary points; Catalan(N) of
// them.  Guarded for N <= max_n (enumeration is exponential).
std::vector<PlanarDiagram> enumerate_diagrams(int N, int max_n = 12);

bool is_noncrossing(const PlanarDiagram& d);

// "e1e3e2" -> {1,3,2}; throws std::invalid_argument on malformed input.
Word parse_word(const std::string& s, int N);

// ASCII rendering: top arcs, through lines, bottom arcs, nested by pairing.
std::string render(const PlanarDiagram& d);

}  // namespace tl
