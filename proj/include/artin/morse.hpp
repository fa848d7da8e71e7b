#pragma once

// Level sets of a one-vertex 2-complex under a folded height function.
//
// Every edge is either Flat (constant height 0) or a Tent (height rising
// from 0 to 1/2 at its midpoint and falling back). Unfolding a 2-cell means
// lifting its boundary to heights in [0, 1] so that flats sit at level 0 or
// 1 and each tent runs from one level to the other; folding t ~ 1 - t then
// recovers the original height. The preimage of 1/4 (unfolded heights 1/4
// and 3/4) and of 1/2 are graphs, and pushing a level-1/4 arc down to the
// integer side gives a map onto the wedge of flat loops.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "artin/error.hpp"
#include "artin/stallings.hpp"
#include "artin/words.hpp"

namespace artin {

  enum class Profile { flat, tent };

  struct ComplexEdge {
    Symbol  label;
    Profile profile = Profile::flat;
  };

  struct HeightedComplex {
    std::vector<ComplexEdge> edges;
    std::vector<Word>        cells;  // cyclic boundary words

    void validate() const {
      std::set<Symbol> seen;
      for (auto const& e : edges) {
        if (e.label.empty() || !seen.insert(e.label).second) {
          throw input_error("complex edge labels must be distinct and nonempty");
        }
      }
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].empty()) {
          throw input_error("cell " + std::to_string(i + 1) + " has empty boundary");
        }
        for (auto const& g : cells[i]) {
          if (!seen.count(g.sym)) {
            throw input_error("cell " + std::to_string(i + 1)
                              + " uses unknown edge " + g.name());
          }
        }
      }
    }

    bool is_tent(Symbol s) const {
      for (auto const& e : edges) {
        if (e.label == s) {
          return e.profile == Profile::tent;
        }
      }
      throw input_error("unknown edge " + s.name());
    }

    std::vector<Symbol> labels(Profile p) const {
      std::vector<Symbol> out;
      for (auto const& e : edges) {
        if (e.profile == p) {
          out.push_back(e.label);
        }
      }
      return out;
    }

    // Position of s among the tents, or among the flats.
    std::size_t index_among(Symbol s) const {
      Profile const p = is_tent(s) ? Profile::tent : Profile::flat;
      auto const    l = labels(p);
      return static_cast<std::size_t>(std::find(l.begin(), l.end(), s) - l.begin());
    }
  };

  // Presentation complex of B: flats x, y, delta; tents b, c, alpha.
  inline HeightedComplex hanham_complex(int m) {
    if (m < 3) {
      throw input_error("hanham_complex needs m >= 3, got " + std::to_string(m));
    }
    HeightedComplex c;
    for (auto [name, p] : std::vector<std::pair<char const*, Profile>>{
             {"x", Profile::flat},
             {"y", Profile::flat},
             {"delta", Profile::flat},
             {"b", Profile::tent},
             {"c", Profile::tent},
             {"alpha", Profile::tent}}) {
      c.edges.push_back({Symbol(name), p});
    }
    auto l = [](char const* name, int sign = 1) { return GenSym(name, sign); };
    Word const x = letter("x");
    c.cells = {
        Word{l("x"), l("c"), l("alpha", -1)},
        Word{l("b"), l("x"), l("alpha", -1)},
        Word{l("b"), l("c"), l("y", -1)},
        Word{l("y"), l("b"), l("y", -1), l("c", -1)},
        Word{l("delta"), l("b"), l("delta", -1), l("c", -1)},
        Word{l("alpha")} * x.pow(m - 2) * Word{l("alpha"), l("delta", -1)},
    };
    c.validate();
    return c;
  }

  enum class TentDirection { ascend, descend };

  struct Placement {
    bool          tent  = false;
    int           level = 0;  // flats: 0 or 1
    TentDirection direction = TentDirection::ascend;
  };

  struct UnfoldedCell {
    std::size_t            cell = 0;
    std::vector<Placement> placements;  // one per boundary occurrence
  };

  // Walks each boundary keeping the level through flats and flipping it
  // across tents. The first tent occurrence ascends, unless the cell index
  // is in `flipped`, which selects the mirror image.
  inline std::vector<UnfoldedCell> unfold_cells(HeightedComplex const&       c,
                                                std::set<std::size_t> const& flipped = {}) {
    c.validate();
    std::vector<UnfoldedCell> out;
    for (std::size_t k = 0; k < c.cells.size(); ++k) {
      auto const& w    = c.cells[k];
      std::size_t tents = 0;
      for (auto const& g : w) {
        tents += c.is_tent(g.sym);
      }
      if (tents % 2 != 0) {
        throw input_error("cell " + std::to_string(k + 1) + " (" + to_string(w)
                          + ") has " + std::to_string(tents)
                          + " tent occurrences; its boundary cannot close up");
      }
      UnfoldedCell u{k, {}};
      int          level = flipped.count(k) ? 1 : 0;
      for (auto const& g : w) {
        Placement p;
        if (c.is_tent(g.sym)) {
          p.tent      = true;
          p.direction = level == 0 ? TentDirection::ascend : TentDirection::descend;
          level       = 1 - level;
        }
        p.level = level;
        u.placements.push_back(p);
      }
      if (level != (flipped.count(k) ? 1 : 0)) {
        throw invariant_error("unfolded walk of cell " + std::to_string(k + 1)
                              + " does not close");
      }
      out.push_back(std::move(u));
    }
    return out;
  }

  enum class Level { quarter, half };

  struct LevelArc {
    std::size_t cell   = 0;
    int         height = 1;  // unfolded height in quarters: 1, 2 or 3
    std::size_t from_occurrence = 0;
    std::size_t to_occurrence   = 0;
    std::size_t source = 0;
    std::size_t target = 0;
    Word        down_label;  // flats on the integer side, boundary order
    std::pair<std::size_t, std::size_t> up_label;  // apex vertices (tent indices)
    Symbol      name;
  };

  struct LevelGraph {
    Level                    level = Level::quarter;
    std::vector<std::string> vertex_names;
    std::vector<LevelArc>    arcs;

    StallingsGraph graph(std::size_t base = 0) const {
      StallingsGraph g;
      g.vertex_count = vertex_names.size();
      g.base         = base;
      for (auto const& a : arcs) {
        g.edges.push_back({a.source, a.target, a.name});
      }
      return g;
    }
  };

  namespace detail {

    struct Crossing {
      std::size_t occurrence;
      bool        upward;
    };

    // Level-1/4 vertex of a crossing: e_+ (2k) sits at intrinsic parameter
    // 1/4 of tent k, e_- (2k + 1) at 3/4.
    inline std::size_t quarter_vertex(std::size_t tent, int sign,
                                      TentDirection dir, int height) {
      bool plus = (sign > 0) == (dir == TentDirection::ascend);
      if (height == 3) {
        plus = !plus;
      }
      return 2 * tent + (plus ? 0 : 1);
    }

  }  // namespace detail

  inline LevelGraph level_graph(HeightedComplex const& c, Level level,
                                std::set<std::size_t> const& flipped = {}) {
    auto const unfolded = unfold_cells(c, flipped);
    auto const tents    = c.labels(Profile::tent);

    LevelGraph out;
    out.level = level;
    for (auto t : tents) {
      if (level == Level::quarter) {
        out.vertex_names.push_back(t.name() + "+");
        out.vertex_names.push_back(t.name() + "-");
      } else {
        out.vertex_names.push_back(t.name());
      }
    }

    std::vector<int> const heights =
        level == Level::quarter ? std::vector<int>{1, 3} : std::vector<int>{2};
    for (auto const& u : unfolded) {
      auto const& w = c.cells[u.cell];
      for (int h : heights) {
        std::vector<detail::Crossing> crossings;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (u.placements[i].tent) {
            crossings.push_back(
                {i, u.placements[i].direction == TentDirection::ascend});
          }
        }
        // Arcs bound the integer-side regions: below for 1/4 and 1/2, above
        // for 3/4. Each runs from the crossing entering such a region to the
        // next crossing leaving it.
        bool const  above = h == 3;
        std::size_t count = 0;
        for (std::size_t k = 0; k < crossings.size(); ++k) {
          auto const& enter = crossings[k];
          if (enter.upward != above) {
            continue;
          }
          auto const& leave = crossings[(k + 1) % crossings.size()];
          if (leave.upward == enter.upward) {
            throw invariant_error("crossings do not alternate in cell "
                                  + std::to_string(u.cell + 1));
          }
          LevelArc arc;
          arc.cell            = u.cell;
          arc.height          = h;
          arc.from_occurrence = enter.occurrence;
          arc.to_occurrence   = leave.occurrence;
          std::vector<GenSym> label;
          for (std::size_t i = (enter.occurrence + 1) % w.size();
               i != leave.occurrence; i = (i + 1) % w.size()) {
            if (u.placements[i].tent) {
              throw invariant_error("down-label of an arc in cell "
                                    + std::to_string(u.cell + 1)
                                    + " reads tent " + w[i].name());
            }
            label.push_back(w[i]);
          }
          arc.down_label = Word(std::move(label));
          auto vertex    = [&](std::size_t occ) {
            std::size_t t = c.index_among(w[occ].sym);
            return level == Level::half
                       ? t
                       : detail::quarter_vertex(t, w[occ].sign,
                                                u.placements[occ].direction, h);
          };
          arc.source   = vertex(enter.occurrence);
          arc.target   = vertex(leave.occurrence);
          arc.up_label = {c.index_among(w[enter.occurrence].sym),
                          c.index_among(w[leave.occurrence].sym)};
          ++count;
          arc.name = level == Level::quarter
                         ? Symbol("q" + std::to_string(u.cell + 1) + "_"
                                  + std::to_string(h) + "_" + std::to_string(count))
                         : Symbol("h" + std::to_string(u.cell + 1) + "_"
                                  + std::to_string(count));
          out.arcs.push_back(std::move(arc));
        }
      }
    }
    return out;
  }

  // Wedge of the flat loops.
  inline StallingsGraph flat_wedge(HeightedComplex const& c) {
    StallingsGraph g;
    g.vertex_count = 1;
    for (auto f : c.labels(Profile::flat)) {
      g.edges.push_back({0, 0, f});
      g.alphabet.push_back(f);
    }
    return g;
  }

  struct LevelMorphisms {
    LevelGraph     quarter;
    LevelGraph     half;
    StallingsGraph x0;
    GraphMorphism  down;       // quarter arcs to their down-labels
    CollapseResult collapsed;  // down with empty-labeled arcs contracted
    GraphMorphism  up;         // e_+, e_- to e; arcs to the half arc with the same ends
  };

  inline LevelMorphisms level_morphisms(HeightedComplex const&       c,
                                        std::set<std::size_t> const& flipped = {}) {
    LevelMorphisms r;
    r.quarter = level_graph(c, Level::quarter, flipped);
    r.half    = level_graph(c, Level::half, flipped);
    r.x0      = flat_wedge(c);

    StallingsGraph const q = r.quarter.graph();
    r.down.domain          = q;
    r.down.codomain        = r.x0;
    r.down.vertex_map.assign(q.vertex_count, 0);
    for (auto const& a : r.quarter.arcs) {
      EdgePath path;
      for (auto const& g : a.down_label) {
        if (c.is_tent(g.sym)) {
          throw invariant_error("down-label reads tent " + g.name());
        }
        path.push_back({c.index_among(g.sym), g.sign});
      }
      r.down.edge_map.push_back(std::move(path));
    }
    r.collapsed = collapse_and_subdivide(r.down);

    r.up.domain   = q;
    r.up.codomain = r.half.graph();
    for (std::size_t v = 0; v < q.vertex_count; ++v) {
      r.up.vertex_map.push_back(v / 2);
    }
    for (auto const& a : r.quarter.arcs) {
      bool found = false;
      for (std::size_t j = 0; j < r.half.arcs.size() && !found; ++j) {
        auto const& h = r.half.arcs[j];
        if (h.cell != a.cell) {
          continue;
        }
        if (h.from_occurrence == a.from_occurrence && h.to_occurrence == a.to_occurrence) {
          r.up.edge_map.push_back({{j, 1}});
          found = true;
        } else if (h.from_occurrence == a.to_occurrence
                   && h.to_occurrence == a.from_occurrence) {
          r.up.edge_map.push_back({{j, -1}});
          found = true;
        }
      }
      if (!found) {
        throw input_error("cell " + std::to_string(a.cell + 1)
                          + " has no half-level arc with the ends of "
                          + a.name.name()
                          + "; cells with more than two tent occurrences "
                            "have no canonical retraction");
      }
    }
    r.up.validate();
    return r;
  }

  struct SplittingReport {
    std::size_t rank_X0             = 0;
    std::size_t rank_Xhalf          = 0;
    std::size_t rank_Xquarter       = 0;
    std::size_t rank_folded_quarter = 0;  // after collapsing greens and folding
    std::size_t green_count         = 0;
    bool        green_forest        = false;
    bool        connected           = false;
    bool        immersion_ok        = false;
    bool        cover_degree_ok     = false;
    bool        index_formula_ok    = false;
    bool        euler_count_ok      = false;

    // Hypotheses of the splitting: the quarter graph immerses into X_0
    // after contracting a forest of greens and double covers X_1/2.
    bool hypotheses_hold() const {
      return connected && green_forest && immersion_ok && cover_degree_ok
             && index_formula_ok && euler_count_ok
             && rank_folded_quarter == rank_Xquarter;
    }
  };

  inline SplittingReport verify_splitting(HeightedComplex const& c) {
    auto const      lm = level_morphisms(c);
    SplittingReport r;
    StallingsGraph const q = lm.quarter.graph();
    StallingsGraph const h = lm.half.graph();
    r.connected = q.is_connected() && h.is_connected();
    r.rank_X0   = graph_rank(lm.x0);
    r.rank_Xquarter = first_betti(q);
    r.rank_Xhalf    = first_betti(h);
    for (auto const& a : lm.quarter.arcs) {
      r.green_count += a.down_label.empty();
    }
    r.green_forest = lm.collapsed.collapsed_forest;

    std::size_t tent_occurrences = 0;
    for (auto const& w : c.cells) {
      for (auto const& g : w) {
        tent_occurrences += c.is_tent(g.sym);
      }
    }
    r.euler_count_ok = q.vertex_count == 2 * c.labels(Profile::tent).size()
                       && q.edges.size() == tent_occurrences;

    r.immersion_ok = check_immersion(lm.collapsed.morphism);
    r.rank_folded_quarter =
        first_betti(fold(lm.collapsed.morphism.domain).graph);
    r.cover_degree_ok  = check_covering(lm.up, 2);
    r.index_formula_ok = !r.cover_degree_ok || !r.connected
                         || r.rank_Xquarter + 1 == 2 * r.rank_Xhalf;
    return r;
  }

  inline SplittingReport verify_splitting(int m) {
    return verify_splitting(hanham_complex(m));
  }

}  // namespace artin
