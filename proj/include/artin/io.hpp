#pragma once

// JSON file formats for presentations, graphs, morphisms, complexes and
// permutation homomorphisms.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/error.hpp"
#include "artin/morse.hpp"
#include "artin/presentations.hpp"
#include "artin/stallings.hpp"
#include "artin/words.hpp"

namespace artin::io {

  using json = nlohmann::json;

  inline json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw input_error("cannot open " + path.string());
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw input_error(path.string() + ": " + e.what());
    }
  }

  namespace detail {

    template <typename T>
    T get(json const& j, char const* key, std::string const& what) {
      if (!j.is_object() || !j.contains(key)) {
        throw input_error(what + " is missing \"" + key + "\"");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        throw input_error(what + ": field \"" + key + "\": " + e.what());
      }
    }

  }  // namespace detail

  // ----- presentations: {"generators":[..], "relators":[..], "label":..} ---

  inline Presentation presentation_from_json(json const& j) {
    auto names    = detail::get<std::vector<std::string>>(j, "generators", "presentation");
    auto relators = detail::get<std::vector<std::string>>(j, "relators", "presentation");
    std::vector<Symbol> gens;
    for (auto const& n : names) {
      gens.emplace_back(n);
    }
    std::vector<Word> rels;
    for (auto const& r : relators) {
      rels.push_back(parse_word(r));
    }
    return Presentation(std::move(gens), std::move(rels), j.value("label", ""));
  }

  inline json to_json(Presentation const& p) {
    json gens = json::array(), rels = json::array();
    for (auto g : p.generators()) {
      gens.push_back(g.name());
    }
    for (auto const& r : p.relators()) {
      rels.push_back(to_string(r));
    }
    return {{"generators", gens}, {"relators", rels}, {"label", p.label()}};
  }

  // ----- graphs: {"vertices":[id], "base":id, "edges":[{from,to,label}]} ---
  // Vertex ids are arbitrary integers; they are renumbered in file order.

  inline StallingsGraph graph_from_json(json const& j) {
    auto ids = detail::get<std::vector<long long>>(j, "vertices", "graph");
    if (ids.empty()) {
      throw input_error("graph has no vertices");
    }
    std::map<long long, std::size_t> index;
    for (auto id : ids) {
      if (!index.emplace(id, index.size()).second) {
        throw input_error("duplicate vertex id " + std::to_string(id));
      }
    }
    auto lookup = [&index](long long id) {
      auto it = index.find(id);
      if (it == index.end()) {
        throw input_error("unknown vertex id " + std::to_string(id));
      }
      return it->second;
    };
    StallingsGraph g;
    g.vertex_count = ids.size();
    g.base         = lookup(j.contains("base") ? detail::get<long long>(j, "base", "graph")
                                               : ids.front());
    for (auto const& e : detail::get<json>(j, "edges", "graph")) {
      auto label = detail::get<std::string>(e, "label", "graph edge");
      g.edges.push_back({lookup(detail::get<long long>(e, "from", "graph edge")),
                         lookup(detail::get<long long>(e, "to", "graph edge")),
                         Symbol(label)});
    }
    if (j.contains("alphabet")) {
      for (auto const& a : detail::get<std::vector<std::string>>(j, "alphabet", "graph")) {
        g.alphabet.emplace_back(a);
      }
    }
    g.validate();
    return g;
  }

  inline json to_json(StallingsGraph const& g) {
    json vertices = json::array(), edges = json::array();
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
      vertices.push_back(v);
    }
    for (auto const& e : g.edges) {
      edges.push_back({{"from", e.source}, {"to", e.target}, {"label", e.label.name()}});
    }
    return {{"vertices", vertices}, {"base", g.base}, {"edges", edges}};
  }

  inline StallingsGraph read_graph(std::filesystem::path const& path) {
    try {
      return graph_from_json(read_json_file(path));
    } catch (input_error const& e) {
      throw input_error(path.string() + ": " + e.what());
    }
  }

  // Label-induced map Y -> X: every edge of Y goes to the unique edge of X
  // with the same label, and vertices follow the edges.
  inline GraphMorphism morphism_by_labels(StallingsGraph const& Y, StallingsGraph const& X) {
    std::map<Symbol, std::size_t> by_label;
    for (std::size_t i = 0; i < X.edges.size(); ++i) {
      if (!by_label.emplace(X.edges[i].label, i).second) {
        throw input_error("codomain label " + X.edges[i].label.name()
                          + " is not unique; the map by labels is ambiguous");
      }
    }
    GraphMorphism m{Y, X, std::vector<std::size_t>(Y.vertex_count, SIZE_MAX), {}};
    m.vertex_map[Y.base] = X.base;
    auto assign = [&m](std::size_t v, std::size_t image) {
      if (m.vertex_map[v] != SIZE_MAX && m.vertex_map[v] != image) {
        throw input_error("labels do not induce a graph map at vertex "
                          + std::to_string(v));
      }
      m.vertex_map[v] = image;
    };
    for (auto const& e : Y.edges) {
      auto it = by_label.find(e.label);
      if (it == by_label.end()) {
        throw input_error("label " + e.label.name() + " does not occur in the codomain");
      }
      assign(e.source, X.edges[it->second].source);
      assign(e.target, X.edges[it->second].target);
      m.edge_map.push_back({{it->second, 1}});
    }
    for (auto& v : m.vertex_map) {
      if (v == SIZE_MAX) {
        throw input_error("isolated domain vertex has no image");
      }
    }
    m.validate();
    return m;
  }

  // ----- morphisms -----
  // {"domain": graph or file, "codomain": graph or file,
  //  "vertex_map": [..], "edge_map": [[{"edge":i, "orientation":1}, ..], ..]}
  // Without vertex_map and edge_map the map is induced by labels.

  inline GraphMorphism morphism_from_json(json const& j,
                                          std::filesystem::path const& dir = {}) {
    auto graph = [&](char const* key) {
      auto const& g = detail::get<json>(j, key, "morphism");
      return g.is_string() ? read_graph(dir / g.get<std::string>()) : graph_from_json(g);
    };
    StallingsGraph Y = graph("domain"), X = graph("codomain");
    if (!j.contains("vertex_map") && !j.contains("edge_map")) {
      return morphism_by_labels(Y, X);
    }
    GraphMorphism m{std::move(Y), std::move(X), {}, {}};
    m.vertex_map = detail::get<std::vector<std::size_t>>(j, "vertex_map", "morphism");
    for (auto const& path : detail::get<json>(j, "edge_map", "morphism")) {
      EdgePath p;
      for (auto const& s : path) {
        p.push_back({detail::get<std::size_t>(s, "edge", "edge step"),
                     s.value("orientation", 1)});
      }
      m.edge_map.push_back(std::move(p));
    }
    m.validate();
    return m;
  }

  inline json to_json(GraphMorphism const& m) {
    json edge_map = json::array();
    for (auto const& p : m.edge_map) {
      json path = json::array();
      for (auto const& s : p) {
        path.push_back({{"edge", s.edge}, {"orientation", s.orientation}});
      }
      edge_map.push_back(path);
    }
    return {{"domain", to_json(m.domain)},
            {"codomain", to_json(m.codomain)},
            {"vertex_map", m.vertex_map},
            {"edge_map", edge_map}};
  }

  // ----- complexes: {"edges":[{label, profile}], "cells":[[occ, ..], ..]} --
  // A cell is a list of word strings (concatenated) or a single word string.

  inline HeightedComplex complex_from_json(json const& j) {
    HeightedComplex c;
    for (auto const& e : detail::get<json>(j, "edges", "complex")) {
      auto profile = detail::get<std::string>(e, "profile", "complex edge");
      if (profile != "flat" && profile != "tent") {
        throw input_error("edge profile must be \"flat\" or \"tent\", got \"" + profile + "\"");
      }
      c.edges.push_back({Symbol(detail::get<std::string>(e, "label", "complex edge")),
                         profile == "tent" ? Profile::tent : Profile::flat});
    }
    for (auto const& cell : detail::get<json>(j, "cells", "complex")) {
      Word w;
      if (cell.is_string()) {
        w = parse_word(cell.get<std::string>());
      } else if (cell.is_array()) {
        for (auto const& occ : cell) {
          if (!occ.is_string()) {
            throw input_error("cell occurrences must be strings");
          }
          w = w * parse_word(occ.get<std::string>());
        }
      } else {
        throw input_error("cell must be a word string or a list of occurrences");
      }
      c.cells.push_back(std::move(w));
    }
    c.validate();
    return c;
  }

  inline json to_json(HeightedComplex const& c) {
    json edges = json::array(), cells = json::array();
    for (auto const& e : c.edges) {
      edges.push_back({{"label", e.label.name()},
                       {"profile", e.profile == Profile::tent ? "tent" : "flat"}});
    }
    for (auto const& w : c.cells) {
      json occ = json::array();
      for (auto const& g : w) {
        occ.push_back(to_string(g));
      }
      cells.push_back(occ);
    }
    return {{"edges", edges}, {"cells", cells}};
  }

  // ----- permutation homomorphisms -----
  // {"source": presentation | {"generators": [..]}, "degree": n,
  //  "images": {"a": "(1 2)" | [1, 0, ..]}}. Arrays are 0-based images,
  // cycle strings 1-based.

  inline GroupHom permutation_hom_from_json(json const& j) {
    auto const& src = detail::get<json>(j, "source", "homomorphism");
    Presentation source =
        src.contains("relators")
            ? presentation_from_json(src)
            : Presentation([&] {
                std::vector<Symbol> gens;
                for (auto const& n :
                     detail::get<std::vector<std::string>>(src, "generators", "source")) {
                  gens.emplace_back(n);
                }
                return gens;
              }(),
                           {});
    PermutationImages target;
    target.degree = detail::get<std::size_t>(j, "degree", "homomorphism");
    json const images = detail::get<json>(j, "images", "homomorphism");
    if (!images.is_object()) {
      throw input_error("homomorphism images must be an object");
    }
    for (auto const& [name, im] : images.items()) {
      Permutation p;
      if (im.is_string()) {
        p = Permutation::from_cycles(im.get<std::string>(), target.degree);
      } else if (im.is_array()) {
        try {
          p = Permutation(im.get<std::vector<std::uint32_t>>());
        } catch (json::exception const&) {
          throw input_error("image of " + name + " is not a list of points");
        }
      } else {
        throw input_error("image of " + name + " must be a cycle string or a list");
      }
      target.images[Symbol(name)] = std::move(p);
    }
    GroupHom h{std::move(source), std::move(target)};
    h.validate();
    return h;
  }

  inline std::vector<Word> words_from_json(json const& j) {
    json const& list = j.is_object() ? detail::get<json>(j, "words", "word list") : j;
    if (!list.is_array()) {
      throw input_error("expected a list of word strings");
    }
    std::vector<Word> out;
    for (auto const& w : list) {
      if (!w.is_string()) {
        throw input_error("expected a list of word strings");
      }
      out.push_back(parse_word(w.get<std::string>()));
    }
    return out;
  }

  inline json words_to_json(std::vector<Word> const& ws) {
    json out = json::array();
    for (auto const& w : ws) {
      out.push_back(to_string(w));
    }
    return out;
  }

}  // namespace artin::io
