#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tl/diagram.hpp"

using namespace tl;

namespace {
long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}
}  // namespace

TEST_CASE("generator diagrams") {
  auto e1 = generator_diagram(1, 2);
  CHECK(e1.pair == std::vector<int>{1, 0, 3, 2});
  auto e2 = generator_diagram(2, 3);
  CHECK(e2.pair == std::vector<int>{3, 2, 1, 0, 5, 4});
  CHECK_THROWS_AS(generator_diagram(0, 3), std::out_of_range);
  CHECK_THROWS_AS(generator_diagram(3, 3), std::out_of_range);
}

TEST_CASE("TL relations hold diagrammatically, exhaustively up to N=8") {
  for (int N = 2; N <= 8; ++N) {
    for (int i = 1; i <= N - 1; ++i) {
      WeightedDiagram ei{generator_diagram(i, N), 0};
      auto sq = compose(ei, ei);
      CHECK(sq.diagram == ei.diagram);
      CHECK(sq.loops == 1);  // e_i^2 = -(q+q^-1) e_i
      for (int j = 1; j <= N - 1; ++j) {
        WeightedDiagram ej{generator_diagram(j, N), 0};
        if (std::abs(i - j) == 1) {
          auto w = compose(compose(ei, ej), ei);
          CHECK(w.diagram == ei.diagram);
          CHECK(w.loops == 0);  // e_i e_{i+-1} e_i = e_i
        } else if (i != j) {
          CHECK(compose(ei, ej).diagram == compose(ej, ei).diagram);
        }
      }
    }
  }
}

TEST_CASE("identity laws and loop additivity") {
  const int N = 5;
  WeightedDiagram id{identity_diagram(N), 0};
  auto d = evaluate_word({2, 1, 4, 3, 2}, N);
  CHECK(compose(id, d).diagram == d.diagram);
  CHECK(compose(d, id).loops == d.loops);
  auto dd = compose(d, d);
  CHECK(dd.loops >= 2 * d.loops);
}

TEST_CASE("star flips top and bottom") {
  const int N = 3;
  auto d12 = evaluate_word({1, 2}, N).diagram;
  auto d21 = evaluate_word({2, 1}, N).diagram;
  CHECK(star(d12) == d21);
  CHECK(star(star(d12)) == d12);
  for (int i = 1; i <= N - 1; ++i) {
    auto ei = generator_diagram(i, N);
    CHECK(star(ei) == ei);
  }
}

TEST_CASE("star is an anti-homomorphism including loops") {
  const int N = 5;
  const std::vector<Word> words{{1, 2, 1}, {2, 1, 4, 3, 2}, {3, 3}, {1, 3}, {2, 2, 2}};
  for (const auto& wa : words)
    for (const auto& wb : words) {
      auto a = evaluate_word(wa, N), b = evaluate_word(wb, N);
      auto ab = compose(a, b);
      auto ba_star = compose({star(b.diagram), b.loops}, {star(a.diagram), a.loops});
      CHECK(star(ab.diagram) == ba_star.diagram);
      CHECK(ab.loops == ba_star.loops);
    }
}

TEST_CASE("word evaluation basics") {
  CHECK(evaluate_word({}, 5).diagram == identity_diagram(5));
  auto w = evaluate_word({1, 2, 1}, 3);
  CHECK(w.diagram == generator_diagram(1, 3));
  CHECK(w.loops == 0);
}

TEST_CASE("enumeration counts Catalan numbers and contains word images") {
  for (int N = 1; N <= 8; ++N) {
    auto all = enumerate_diagrams(N);
    CHECK(static_cast<long>(all.size()) == catalan(N));
    for (const auto& d : all) CHECK(is_noncrossing(d));
    std::set<std::vector<int>> dedup;
    for (const auto& d : all) dedup.insert(d.pair);
    CHECK(dedup.size() == all.size());
  }
  CHECK(enumerate_diagrams(10).size() == 16796);
  CHECK_THROWS_AS(enumerate_diagrams(13), std::length_error);

  // the ten tableau words of the N=5 middle-ish sector give distinct diagrams
  const std::vector<Word> words{{},        {2},          {1, 2},       {3, 2},
                                {1, 3, 2}, {2, 1, 3, 2}, {4, 3, 2},    {1, 4, 3, 2},
                                {2, 1, 4, 3, 2}, {3, 2, 1, 4, 3, 2}};
  std::set<std::vector<int>> images;
  auto all5 = enumerate_diagrams(5);
  for (const auto& w : words) {
    auto d = evaluate_word(w, 5);
    CHECK(d.loops == 0);
    images.insert(d.diagram.pair);
    CHECK(std::find(all5.begin(), all5.end(), d.diagram) != all5.end());
  }
  CHECK(images.size() == words.size());
}

TEST_CASE("word parsing") {
  CHECK(parse_word("e1e3e2", 7) == Word{1, 3, 2});
  CHECK(parse_word("  e2  e1 ", 5) == Word{2, 1});
  CHECK(parse_word("", 5).empty());
  CHECK_THROWS_AS(parse_word("x1", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("e9", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("e", 5), std::invalid_argument);
}

TEST_CASE("rendering is deterministic and shows all strands") {
  auto s = render(generator_diagram(2, 5));
  CHECK(s == render(generator_diagram(2, 5)));
  CHECK(s.find('|') != std::string::npos);   // through lines
  CHECK(s.find('\\') != std::string::npos);  // arcs
}
