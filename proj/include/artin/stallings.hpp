#pragma once

// Based labeled graphs representing subgroups of free groups: Stallings
// folding, rank, membership, immersion and covering checks on graph maps,
// oppressive sets of immersions, and separation by finite quotients.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "artin/error.hpp"
#include "artin/presentations.hpp"
#include "artin/words.hpp"

namespace artin {

  struct GraphEdge {
    std::size_t source = 0;
    std::size_t target = 0;
    Symbol      label;

    friend bool operator==(GraphEdge const&, GraphEdge const&) = default;
  };

  // Edges are identified by their index. Vertices are 0 .. vertex_count-1.
  struct StallingsGraph {
    std::size_t            vertex_count = 1;
    std::vector<GraphEdge> edges;
    std::size_t            base = 0;
    std::vector<Symbol>    alphabet;  // informational; empty means "any"

    void validate() const {
      if (vertex_count == 0) {
        throw input_error("graph has no vertices");
      }
      if (base >= vertex_count) {
        throw input_error("base vertex out of range");
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        auto const& e = edges[i];
        if (e.source >= vertex_count || e.target >= vertex_count) {
          throw input_error("edge " + std::to_string(i)
                            + " has an endpoint out of range");
        }
        if (e.label.empty()) {
          throw input_error("edge " + std::to_string(i) + " has no label");
        }
        if (!alphabet.empty()
            && std::find(alphabet.begin(), alphabet.end(), e.label)
                   == alphabet.end()) {
          throw input_error("edge label " + e.label.name()
                            + " is outside the alphabet");
        }
      }
    }

    std::size_t degree(std::size_t v) const {
      std::size_t d = 0;
      for (auto const& e : edges) {
        d += (e.source == v) + (e.target == v);
      }
      return d;
    }

    bool is_connected() const {
      std::vector<std::size_t> parent(vertex_count);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      };
      std::size_t components = vertex_count;
      for (auto const& e : edges) {
        auto a = find(e.source), b = find(e.target);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
      return components == 1;
    }

    bool is_folded() const {
      std::set<std::tuple<std::size_t, Symbol, int>> seen;
      for (auto const& e : edges) {
        if (!seen.insert({e.source, e.label, +1}).second
            || !seen.insert({e.target, e.label, -1}).second) {
          return false;
        }
      }
      return true;
    }
  };

  inline std::size_t graph_rank(StallingsGraph const& g) {
    if (!g.is_connected()) {
      throw input_error("rank is defined for connected graphs only");
    }
    return g.edges.size() + 1 - g.vertex_count;
  }

  // E - V + (number of components)
  inline std::size_t first_betti(StallingsGraph const& g) {
    std::vector<std::size_t> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    std::size_t components = g.vertex_count;
    for (auto const& e : g.edges) {
      auto a = find(e.source), b = find(e.target);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    return g.edges.size() + components - g.vertex_count;
  }

  struct FoldResult {
    StallingsGraph graph;
    std::size_t    folds = 0;
  };

  // Folds until no two edges share (source, label) or (target, label). With
  // an rng the next fold is drawn uniformly from all available ones.
  inline FoldResult fold(StallingsGraph const& g, std::mt19937_64* rng = nullptr) {
    g.validate();
    std::vector<std::size_t> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    std::vector<GraphEdge> edges = g.edges;
    std::size_t            folds = 0;

    while (true) {
      // pairs (kept, dropped, direction) of foldable edges
      std::vector<std::tuple<std::size_t, std::size_t, int>> candidates;
      std::map<std::tuple<std::size_t, Symbol, int>, std::size_t> first;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        auto const& e = edges[i];
        for (int dir : {+1, -1}) {
          std::size_t at  = find(dir > 0 ? e.source : e.target);
          auto [it, fresh] = first.insert({{at, e.label, dir}, i});
          if (!fresh) {
            candidates.emplace_back(it->second, i, dir);
            if (!rng) {
              break;
            }
          }
        }
        if (!rng && !candidates.empty()) {
          break;
        }
      }
      if (candidates.empty()) {
        break;
      }
      std::size_t pick = 0;
      if (rng) {
        pick = std::uniform_int_distribution<std::size_t>(
            0, candidates.size() - 1)(*rng);
      }
      auto [keep, drop, dir] = candidates[pick];
      std::size_t a = find(dir > 0 ? edges[keep].target : edges[keep].source);
      std::size_t b = find(dir > 0 ? edges[drop].target : edges[drop].source);
      if (a != b) {
        parent[b] = a;
      }
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
      ++folds;
    }

    std::vector<std::size_t> index(g.vertex_count, SIZE_MAX);
    StallingsGraph           out;
    out.alphabet     = g.alphabet;
    out.vertex_count = 0;
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
      std::size_t r = find(v);
      if (index[r] == SIZE_MAX) {
        index[r] = out.vertex_count++;
      }
    }
    out.base = index[find(g.base)];
    for (auto const& e : edges) {
      out.edges.push_back({index[find(e.source)], index[find(e.target)], e.label});
    }
    return {std::move(out), folds};
  }

  // Breadth-first relabeling from the base, exploring edges in order of
  // (label, direction). For folded connected graphs two graphs are
  // isomorphic as based labeled graphs iff their canonical forms agree.
  struct CanonicalForm {
    std::size_t                                              vertex_count = 0;
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> edges;

    friend bool operator==(CanonicalForm const&, CanonicalForm const&) = default;
  };

  inline CanonicalForm canonical_form(StallingsGraph const& g) {
    std::vector<std::vector<std::size_t>> incident(g.vertex_count);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      incident[g.edges[i].source].push_back(i);
      if (g.edges[i].target != g.edges[i].source) {
        incident[g.edges[i].target].push_back(i);
      }
    }
    std::vector<std::size_t> order(g.vertex_count, SIZE_MAX);
    std::size_t              next = 0;
    std::queue<std::size_t>  queue;
    order[g.base] = next++;
    queue.push(g.base);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      // (label, direction, edge index) sorted; direction +1 = outgoing
      std::vector<std::tuple<std::string, int, std::size_t>> steps;
      for (auto i : incident[v]) {
        auto const& e = g.edges[i];
        if (e.source == v) {
          steps.emplace_back(e.label.name(), +1, i);
        }
        if (e.target == v) {
          steps.emplace_back(e.label.name(), -1, i);
        }
      }
      std::sort(steps.begin(), steps.end());
      for (auto const& [label, dir, i] : steps) {
        std::size_t w = dir > 0 ? g.edges[i].target : g.edges[i].source;
        if (order[w] == SIZE_MAX) {
          order[w] = next++;
          queue.push(w);
        }
      }
    }
    CanonicalForm out;
    out.vertex_count = next;
    for (auto const& e : g.edges) {
      if (order[e.source] != SIZE_MAX) {
        out.edges.emplace_back(order[e.source], order[e.target], e.label.name());
      }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
  }

  // ---------------------------------------------------------------------
  // Morphisms
  // ---------------------------------------------------------------------

  // Codomain edge traversed forwards (+1) or backwards (-1).
  struct EdgeStep {
    std::size_t edge        = 0;
    int         orientation = 1;

    friend bool operator==(EdgeStep const&, EdgeStep const&) = default;
  };

  using EdgePath = std::vector<EdgeStep>;

  struct GraphMorphism {
    StallingsGraph           domain;
    StallingsGraph           codomain;
    std::vector<std::size_t> vertex_map;
    std::vector<EdgePath>    edge_map;  // empty path: edge collapsed

    void validate() const {
      domain.validate();
      codomain.validate();
      if (vertex_map.size() != domain.vertex_count
          || edge_map.size() != domain.edges.size()) {
        throw input_error("morphism maps have the wrong size");
      }
      for (auto v : vertex_map) {
        if (v >= codomain.vertex_count) {
          throw input_error("vertex image out of range");
        }
      }
      for (std::size_t i = 0; i < edge_map.size(); ++i) {
        std::size_t at = vertex_map[domain.edges[i].source];
        for (auto const& s : edge_map[i]) {
          if (s.edge >= codomain.edges.size()
              || (s.orientation != 1 && s.orientation != -1)) {
            throw input_error("bad edge step in image of edge "
                              + std::to_string(i));
          }
          auto const& c = codomain.edges[s.edge];
          if ((s.orientation > 0 ? c.source : c.target) != at) {
            throw input_error("image of edge " + std::to_string(i)
                              + " is not a path");
          }
          at = s.orientation > 0 ? c.target : c.source;
        }
        if (at != vertex_map[domain.edges[i].target]) {
          throw input_error("image of edge " + std::to_string(i)
                            + " does not end at the image of its target");
        }
      }
    }

    // Word read along the image of a domain path, in codomain labels.
    Word image_word(EdgePath const& domain_path) const {
      std::vector<GenSym> out;
      for (auto const& s : domain_path) {
        EdgePath im = edge_map[s.edge];
        if (s.orientation < 0) {
          std::reverse(im.begin(), im.end());
          for (auto& t : im) {
            t.orientation = -t.orientation;
          }
        }
        for (auto const& t : im) {
          out.emplace_back(codomain.edges[t.edge].label, t.orientation);
        }
      }
      return Word(std::move(out));
    }
  };

  inline GraphMorphism identity_morphism(StallingsGraph const& g) {
    GraphMorphism m{g, g, {}, {}};
    m.vertex_map.resize(g.vertex_count);
    std::iota(m.vertex_map.begin(), m.vertex_map.end(), 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      m.edge_map.push_back({{i, 1}});
    }
    return m;
  }

  struct CollapseResult {
    GraphMorphism morphism;
    bool          collapsed_forest = true;  // collapsed edges contain no cycle
    std::size_t   collapsed        = 0;
  };

  // Contracts edges with empty image and subdivides edges whose image has
  // length k > 1 into k edges, so that every edge maps to a single edge.
  // Labels of new edges are the labels of their image edges.
  inline CollapseResult collapse_and_subdivide(GraphMorphism const& m) {
    m.validate();
    auto const&              d = m.domain;
    std::vector<std::size_t> parent(d.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    CollapseResult out;
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
      if (!m.edge_map[i].empty()) {
        continue;
      }
      ++out.collapsed;
      auto a = find(d.edges[i].source), b = find(d.edges[i].target);
      if (a == b) {
        out.collapsed_forest = false;
      } else {
        parent[b] = a;
      }
    }

    GraphMorphism r;
    r.codomain = m.codomain;
    r.domain.alphabet = d.alphabet;
    std::vector<std::size_t> index(d.vertex_count, SIZE_MAX);
    std::size_t              count = 0;
    for (std::size_t v = 0; v < d.vertex_count; ++v) {
      if (index[find(v)] == SIZE_MAX) {
        index[find(v)] = count++;
        r.vertex_map.push_back(m.vertex_map[v]);
      }
    }
    r.domain.base = index[find(d.base)];
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
      auto const& path = m.edge_map[i];
      if (path.empty()) {
        continue;
      }
      std::size_t at = index[find(d.edges[i].source)];
      for (std::size_t k = 0; k < path.size(); ++k) {
        auto const& c = m.codomain.edges[path[k].edge];
        std::size_t next;
        if (k + 1 == path.size()) {
          next = index[find(d.edges[i].target)];
        } else {
          next = count++;
          r.vertex_map.push_back(path[k].orientation > 0 ? c.target : c.source);
        }
        // the new edge carries the codomain edge's orientation
        if (path[k].orientation > 0) {
          r.domain.edges.push_back({at, next, c.label});
        } else {
          r.domain.edges.push_back({next, at, c.label});
        }
        r.edge_map.push_back({{path[k].edge, 1}});
        at = next;
      }
    }
    r.domain.vertex_count = count;
    out.morphism          = std::move(r);
    return out;
  }

  namespace detail {

    inline void require_single_edge_images(GraphMorphism const& m) {
      for (std::size_t i = 0; i < m.edge_map.size(); ++i) {
        if (m.edge_map[i].size() != 1) {
          throw input_error("edge " + std::to_string(i) + " maps to a path of length "
                            + std::to_string(m.edge_map[i].size())
                            + "; collapse and subdivide first");
        }
      }
    }

    // Star of every domain vertex as (codomain edge, attaching end) keys,
    // end +1 = source of the codomain edge, -1 = target.
    inline std::vector<std::multiset<std::pair<std::size_t, int>>> stars(
        GraphMorphism const& m) {
      std::vector<std::multiset<std::pair<std::size_t, int>>> out(
          m.domain.vertex_count);
      for (std::size_t i = 0; i < m.domain.edges.size(); ++i) {
        auto const& e = m.domain.edges[i];
        auto const& s = m.edge_map[i].front();
        out[e.source].insert({s.edge, s.orientation});
        out[e.target].insert({s.edge, -s.orientation});
      }
      return out;
    }

  }  // namespace detail

  // Locally injective: at no domain vertex do two incident edge-ends map to
  // the same end of the same codomain edge.
  inline bool check_immersion(GraphMorphism const& m) {
    m.validate();
    detail::require_single_edge_images(m);
    for (auto const& star : detail::stars(m)) {
      std::set<std::pair<std::size_t, int>> distinct(star.begin(), star.end());
      if (distinct.size() != star.size()) {
        return false;
      }
    }
    return true;
  }

  inline bool check_covering(GraphMorphism const& m, std::size_t d) {
    m.validate();
    detail::require_single_edge_images(m);
    std::vector<std::size_t> preimages(m.codomain.vertex_count, 0);
    for (auto v : m.vertex_map) {
      ++preimages[v];
    }
    if (std::any_of(preimages.begin(), preimages.end(),
                    [d](std::size_t c) { return c != d; })) {
      return false;
    }
    std::vector<std::multiset<std::pair<std::size_t, int>>> codomain_star(
        m.codomain.vertex_count);
    for (std::size_t i = 0; i < m.codomain.edges.size(); ++i) {
      codomain_star[m.codomain.edges[i].source].insert({i, +1});
      codomain_star[m.codomain.edges[i].target].insert({i, -1});
    }
    auto const stars = detail::stars(m);
    for (std::size_t v = 0; v < stars.size(); ++v) {
      if (stars[v] != codomain_star[m.vertex_map[v]]) {
        return false;
      }
    }
    return true;
  }

  // ---------------------------------------------------------------------
  // Subgroup graphs
  // ---------------------------------------------------------------------

  inline StallingsGraph subgroup_graph_from_words(std::vector<Word> const&   words,
                                                  std::vector<Symbol> const& alphabet) {
    StallingsGraph g;
    g.alphabet = alphabet;
    for (auto const& w : words) {
      for (auto const& l : w) {
        if (std::find(alphabet.begin(), alphabet.end(), l.sym) == alphabet.end()) {
          throw input_error("letter " + l.name() + " is outside the alphabet");
        }
      }
      Word r = free_reduce(w);
      if (r.empty()) {
        continue;
      }
      std::size_t at = g.base;
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::size_t next = i + 1 == r.size() ? g.base : g.vertex_count++;
        if (r[i].sign > 0) {
          g.edges.push_back({at, next, r[i].sym});
        } else {
          g.edges.push_back({next, at, r[i].sym});
        }
        at = next;
      }
    }
    return fold(g).graph;
  }

  // Vertex reached by reading w from `from`, or nullopt when the path leaves
  // the graph.
  inline std::optional<std::size_t> read_word(StallingsGraph const& g,
                                              Word const& w, std::size_t from) {
    if (!g.is_folded()) {
      throw input_error("word reading requires a folded graph");
    }
    std::map<std::pair<std::size_t, Symbol>, std::size_t> out, in;
    for (auto const& e : g.edges) {
      out[{e.source, e.label}] = e.target;
      in[{e.target, e.label}]  = e.source;
    }
    std::size_t at = from;
    for (auto const& l : w) {
      if (!g.alphabet.empty()
          && std::find(g.alphabet.begin(), g.alphabet.end(), l.sym)
                 == g.alphabet.end()) {
        throw input_error("letter " + l.name() + " is outside the alphabet");
      }
      auto const& table = l.sign > 0 ? out : in;
      auto        it    = table.find({at, l.sym});
      if (it == table.end()) {
        return std::nullopt;
      }
      at = it->second;
    }
    return at;
  }

  inline bool membership(StallingsGraph const& g, Word const& w) {
    auto end = read_word(g, free_reduce(w), g.base);
    return end && *end == g.base;
  }

  // Free basis of pi_1(g, base): one word per edge outside a BFS spanning
  // tree.
  inline std::vector<Word> spanning_tree_generators(StallingsGraph const& g) {
    if (!g.is_connected()) {
      throw input_error("spanning tree of a disconnected graph");
    }
    std::vector<std::vector<std::size_t>> incident(g.vertex_count);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      incident[g.edges[i].source].push_back(i);
      incident[g.edges[i].target].push_back(i);
    }
    std::vector<std::optional<Word>> to(g.vertex_count);
    std::vector<bool>                tree(g.edges.size(), false);
    std::queue<std::size_t>          queue;
    to[g.base] = Word{};
    queue.push(g.base);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      for (auto i : incident[v]) {
        auto const& e = g.edges[i];
        if (e.source == v && !to[e.target]) {
          to[e.target] = *to[v] * Word{GenSym(e.label, 1)};
          tree[i]      = true;
          queue.push(e.target);
        } else if (e.target == v && !to[e.source]) {
          to[e.source] = *to[v] * Word{GenSym(e.label, -1)};
          tree[i]      = true;
          queue.push(e.source);
        }
      }
    }
    std::vector<Word> out;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (!tree[i]) {
        auto const& e = g.edges[i];
        out.push_back(free_reduce(*to[e.source] * Word{GenSym(e.label, 1)}
                                  * to[e.target]->inverse()));
      }
    }
    return out;
  }

  // ---------------------------------------------------------------------
  // Oppressive sets
  // ---------------------------------------------------------------------

  struct OppressiveOptions {
    // Admit a trivial second path (y2 = y0), as in the literal definition.
    bool allow_trivial_tail = false;
    // Require the junction vertices y1 and y2 to differ.
    bool require_distinct_junction = false;
  };

  struct OppressiveRecord {
    EdgePath    mu1;
    EdgePath    mu2;
    std::size_t y1 = 0;
    std::size_t y2 = 0;
    Word        word;  // reduced rho(mu1) rho(mu2)
  };

  namespace detail {

    // Every simple path from `start` ending at a different vertex.
    inline std::vector<std::pair<EdgePath, std::size_t>> simple_paths(
        StallingsGraph const& g, std::size_t start) {
      std::vector<std::vector<std::size_t>> incident(g.vertex_count);
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        incident[g.edges[i].source].push_back(i);
        if (g.edges[i].target != g.edges[i].source) {
          incident[g.edges[i].target].push_back(i);
        }
      }
      std::vector<std::pair<EdgePath, std::size_t>> out;
      std::vector<bool>                              visited(g.vertex_count, false);
      EdgePath                                       path;
      auto dfs = [&](auto&& self, std::size_t v) -> void {
        visited[v] = true;
        for (auto i : incident[v]) {
          auto const& e = g.edges[i];
          for (int o : {+1, -1}) {
            if ((o > 0 ? e.source : e.target) != v) {
              continue;
            }
            std::size_t w = o > 0 ? e.target : e.source;
            if (visited[w]) {
              continue;
            }
            path.push_back({i, o});
            out.emplace_back(path, w);
            self(self, w);
            path.pop_back();
          }
        }
        visited[v] = false;
      };
      dfs(dfs, start);
      return out;
    }

    inline EdgePath reversed(EdgePath p) {
      std::reverse(p.begin(), p.end());
      for (auto& s : p) {
        s.orientation = -s.orientation;
      }
      return p;
    }

  }  // namespace detail

  // All pairs (mu1, mu2) with mu1 a simple non-closed path y0 -> y1, mu2 a
  // simple non-closed path y2 -> y0 (or trivial, when allowed) and
  // rho(y1) = rho(y2). Words that reduce to the identity are dropped.
  inline std::vector<OppressiveRecord> oppressive_records(
      GraphMorphism const& rho, OppressiveOptions const& options = {}) {
    rho.validate();
    if (!check_immersion(rho)) {
      throw input_error("oppressive sets are defined for immersions");
    }
    std::size_t const y0    = rho.domain.base;
    auto const        paths = detail::simple_paths(rho.domain, y0);

    std::vector<std::pair<EdgePath, std::size_t>> tails;  // (mu2, y2)
    for (auto const& [p, end] : paths) {
      tails.emplace_back(detail::reversed(p), end);
    }
    if (options.allow_trivial_tail) {
      tails.emplace_back(EdgePath{}, y0);
    }

    std::vector<OppressiveRecord> out;
    for (auto const& [mu1, y1] : paths) {
      for (auto const& [mu2, y2] : tails) {
        if (rho.vertex_map[y1] != rho.vertex_map[y2]) {
          continue;
        }
        if (options.require_distinct_junction && y1 == y2) {
          continue;
        }
        EdgePath both = mu1;
        both.insert(both.end(), mu2.begin(), mu2.end());
        Word w = free_reduce(rho.image_word(both));
        if (w.empty()) {
          continue;
        }
        out.push_back({mu1, mu2, y1, y2, std::move(w)});
      }
    }
    return out;
  }

  inline std::vector<Word> oppressive_set(GraphMorphism const&     rho,
                                          OppressiveOptions const& options = {}) {
    std::set<Word> words;
    for (auto const& r : oppressive_records(rho, options)) {
      words.insert(r.word);
    }
    return {words.begin(), words.end()};
  }

  // ---------------------------------------------------------------------
  // Separation in a finite permutation quotient
  // ---------------------------------------------------------------------

  // Elements of the subgroup generated by `gens`, by closure; throws when
  // the order exceeds `order_limit`.
  inline std::set<Permutation> generated_subgroup(std::vector<Permutation> const& gens,
                                                  std::size_t                     degree,
                                                  std::size_t order_limit) {
    std::set<Permutation>   elements{Permutation::identity(degree)};
    std::queue<Permutation> queue;
    queue.push(Permutation::identity(degree));
    while (!queue.empty()) {
      Permutation p = queue.front();
      queue.pop();
      for (auto const& g : gens) {
        Permutation q = p * g;
        if (elements.insert(q).second) {
          if (elements.size() > order_limit) {
            throw input_error("image subgroup exceeds the order limit of "
                              + std::to_string(order_limit));
          }
          queue.push(std::move(q));
        }
      }
    }
    return elements;
  }

  // True iff no word of S maps into phi(pi_1(C)).
  inline bool separates_finite(GroupHom const& phi, StallingsGraph const& C,
                               std::vector<Word> const& S,
                               std::size_t              order_limit = 100000) {
    phi.validate();
    auto const* perms = std::get_if<PermutationImages>(&phi.target);
    if (!perms) {
      throw input_error("separation needs a permutation target");
    }
    for (auto const& e : C.edges) {
      if (phi.source.index_of(e.label) < 0) {
        throw input_error("graph label " + e.label.name()
                          + " is not a source generator");
      }
    }
    std::vector<Permutation> gens;
    for (auto const& w : spanning_tree_generators(C)) {
      gens.push_back(phi.apply_permutation(w));
    }
    auto const image = generated_subgroup(gens, perms->degree, order_limit);
    for (auto const& s : S) {
      if (image.count(phi.apply_permutation(s))) {
        return false;
      }
    }
    return true;
  }

}  // namespace artin
