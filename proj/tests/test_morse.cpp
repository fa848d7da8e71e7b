#include <gtest/gtest.h>

#include "artin/morse.hpp"

using namespace artin;

namespace {

  std::set<std::set<std::string>> green_pairs(LevelGraph const& q) {
    std::set<std::set<std::string>> out;
    for (auto const& a : q.arcs) {
      if (a.down_label.empty()) {
        out.insert({q.vertex_names[a.source], q.vertex_names[a.target]});
      }
    }
    return out;
  }

  std::string describe(LevelGraph const& q, LevelArc const& a) {
    return a.name.name() + " " + q.vertex_names[a.source] + "->" + q.vertex_names[a.target]
           + " [" + to_string(a.down_label) + "]";
  }

  HeightedComplex corrupted(int m) {
    auto c      = hanham_complex(m);
    auto cell   = std::vector<GenSym>(c.cells[5].begin(), c.cells[5].end());
    for (auto& g : cell) {
      if (g.sym == Symbol("x")) {
        g.sym = Symbol("y");
      }
    }
    c.cells[5] = Word(std::move(cell));
    return c;
  }

}  // namespace

TEST(Complex, HanhamShape) {
  auto c = hanham_complex(3);
  EXPECT_EQ(c.cells.size(), 6u);
  EXPECT_EQ(c.labels(Profile::flat), symbols({"x", "y", "delta"}));
  EXPECT_EQ(c.labels(Profile::tent), symbols({"b", "c", "alpha"}));
  EXPECT_EQ(c.cells[5].size(), 4u);
  EXPECT_EQ(hanham_complex(6).cells[5].size(), 7u);
  EXPECT_THROW(hanham_complex(2), input_error);
}

TEST(Complex, Validation) {
  HeightedComplex c;
  c.edges = {{Symbol("t"), Profile::tent}, {Symbol("t"), Profile::flat}};
  EXPECT_THROW(c.validate(), input_error);
  c.edges = {{Symbol("t"), Profile::tent}};
  c.cells = {parse_word("tu")};
  EXPECT_THROW(c.validate(), input_error);
}

TEST(Unfold, PlacementsAlternate) {
  auto u = unfold_cells(hanham_complex(3));
  // x c alpha^-1: flat at 0, c ascends, alpha descends
  auto const& p = u[0].placements;
  ASSERT_EQ(p.size(), 3u);
  EXPECT_FALSE(p[0].tent);
  EXPECT_EQ(p[0].level, 0);
  EXPECT_EQ(p[1].direction, TentDirection::ascend);
  EXPECT_EQ(p[1].level, 1);
  EXPECT_EQ(p[2].direction, TentDirection::descend);
  EXPECT_EQ(p[2].level, 0);
  auto f = unfold_cells(hanham_complex(3), {0});
  EXPECT_EQ(f[0].placements[0].level, 1);
  EXPECT_EQ(f[0].placements[1].direction, TentDirection::descend);
}

TEST(Unfold, OddTentCountIsRejected) {
  HeightedComplex c;
  c.edges = {{Symbol("t"), Profile::tent}, {Symbol("f"), Profile::flat}};
  c.cells = {parse_word("ff"), parse_word("tf")};
  try {
    unfold_cells(c);
    FAIL() << "expected input_error";
  } catch (input_error const& e) {
    EXPECT_NE(std::string(e.what()).find("cell 2"), std::string::npos) << e.what();
  }
}

TEST(LevelGraphs, HanhamCounts) {
  auto const c = hanham_complex(3);
  auto const q = level_graph(c, Level::quarter);
  auto const h = level_graph(c, Level::half);
  EXPECT_EQ(q.vertex_names.size(), 6u);
  EXPECT_EQ(q.arcs.size(), 12u);
  EXPECT_EQ(h.vertex_names.size(), 3u);
  EXPECT_EQ(h.arcs.size(), 6u);
  // Euler characteristic by hand: 12 - 6 + 1 and 6 - 3 + 1
  EXPECT_EQ(first_betti(q.graph()), 7u);
  EXPECT_EQ(first_betti(h.graph()), 4u);
  std::set<std::set<std::string>> greens = {
      {"c-", "alpha-"}, {"b+", "alpha+"}, {"b-", "c+"}};
  EXPECT_EQ(green_pairs(q), greens);
}

TEST(LevelGraphs, QuarterArcsForThree) {
  auto const q = level_graph(hanham_complex(3), Level::quarter);
  std::vector<std::string> expected = {
      "q1_1_1 alpha+->c+ [x]",         "q1_3_1 c-->alpha- [1]",
      "q2_1_1 alpha+->b+ [1]",         "q2_3_1 b-->alpha- [x]",
      "q3_1_1 c-->b+ [y^-1]",          "q3_3_1 b-->c+ [1]",
      "q4_1_1 c+->b+ [y]",             "q4_3_1 b-->c- [y^-1]",
      "q5_1_1 c+->b+ [{delta}]",       "q5_3_1 b-->c- [{delta}^-1]",
      "q6_1_1 alpha-->alpha+ [{delta}^-1]", "q6_3_1 alpha-->alpha+ [x]",
  };
  std::vector<std::string> got;
  for (auto const& a : q.arcs) {
    got.push_back(describe(q, a));
  }
  EXPECT_EQ(got, expected);
}

TEST(LevelGraphs, MirrorImageKeepsShape) {
  std::set<std::size_t> all = {0, 1, 2, 3, 4, 5};
  auto const c  = hanham_complex(4);
  auto const q  = level_graph(c, Level::quarter);
  auto const qf = level_graph(c, Level::quarter, all);
  EXPECT_EQ(qf.arcs.size(), q.arcs.size());
  EXPECT_EQ(first_betti(qf.graph()), first_betti(q.graph()));
  std::multiset<std::string> labels, flipped_labels;
  for (auto const& a : q.arcs) {
    labels.insert(to_string(a.down_label));
  }
  for (auto const& a : qf.arcs) {
    flipped_labels.insert(to_string(a.down_label));
  }
  EXPECT_EQ(labels, flipped_labels);
}

TEST(Splitting, RanksForSeveralM) {
  for (int m = 3; m <= 8; ++m) {
    auto r = verify_splitting(m);
    EXPECT_EQ(r.rank_X0, 3u);
    EXPECT_EQ(r.rank_Xhalf, 4u);
    EXPECT_EQ(r.rank_Xquarter, 7u);
    EXPECT_EQ(r.green_count, 3u);
    EXPECT_TRUE(r.immersion_ok);
    EXPECT_TRUE(r.cover_degree_ok);
    EXPECT_EQ(r.rank_Xquarter + 1, 2 * r.rank_Xhalf);
    EXPECT_EQ(r.rank_folded_quarter, 7u);
    EXPECT_TRUE(r.hypotheses_hold()) << m;
  }
}

TEST(Splitting, UpMapIsADoubleCover) {
  auto lm = level_morphisms(hanham_complex(5));
  EXPECT_TRUE(check_immersion(lm.up));
  EXPECT_TRUE(check_covering(lm.up, 2));
  EXPECT_TRUE(lm.collapsed.collapsed_forest);
  EXPECT_EQ(lm.collapsed.collapsed, 3u);
  // each quarter arc reads its down-label in X_0
  for (std::size_t i = 0; i < lm.quarter.arcs.size(); ++i) {
    EXPECT_EQ(lm.down.image_word({{i, 1}}), lm.quarter.arcs[i].down_label);
  }
}

TEST(Splitting, CorruptedCellIsFlagged) {
  auto r = verify_splitting(corrupted(3));
  EXPECT_FALSE(r.immersion_ok);
  EXPECT_EQ(r.rank_folded_quarter, 3u);
  EXPECT_FALSE(r.hypotheses_hold());
}

TEST(Splitting, FlatWedge) {
  auto w = flat_wedge(hanham_complex(3));
  EXPECT_EQ(w.vertex_count, 1u);
  EXPECT_EQ(graph_rank(w), 3u);
}
