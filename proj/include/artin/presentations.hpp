#pragma once

// Finitely presented groups, homomorphisms given by generator images, and a
// bounded relator-insertion search that certifies triviality of words.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "artin/error.hpp"
#include "artin/intlinalg.hpp"
#include "artin/words.hpp"

namespace artin {

  class Presentation {
   public:
    Presentation() = default;

    Presentation(std::vector<Symbol> generators,
                 std::vector<Word>   relators,
                 std::string         label = {})
        : generators_(std::move(generators)), label_(std::move(label)) {
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].empty()) {
          throw input_error("empty generator name");
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (generators_[i] == generators_[j]) {
            throw input_error("duplicate generator " + generators_[i].name());
          }
        }
      }
      relators_.reserve(relators.size());
      cyclic_.reserve(relators.size());
      for (auto const& r : relators) {
        for (auto const& g : r) {
          if (index_of(g.sym) < 0) {
            throw input_error("relator " + to_string(r)
                              + " uses unknown generator " + g.name());
          }
        }
        Word reduced = free_reduce(r);
        if (reduced.empty()) {
          throw input_error("relator " + to_string(r)
                            + " is freely trivial");
        }
        cyclic_.push_back(cyclically_reduce(reduced));
        relators_.push_back(std::move(reduced));
      }
    }

    std::vector<Symbol> const& generators() const noexcept {
      return generators_;
    }
    std::vector<Word> const& relators() const noexcept {
      return relators_;
    }
    // Cyclically reduced forms, index-aligned with relators().
    std::vector<Word> const& cyclic_relators() const noexcept {
      return cyclic_;
    }
    std::string const& label() const noexcept {
      return label_;
    }

    int index_of(Symbol s) const {
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] == s) {
          return static_cast<int>(i);
        }
      }
      return -1;
    }
    bool contains(Word const& w) const {
      return std::all_of(w.begin(), w.end(), [this](GenSym const& g) {
        return index_of(g.sym) >= 0;
      });
    }

   private:
    std::vector<Symbol> generators_;
    std::vector<Word>   relators_;
    std::vector<Word>   cyclic_;
    std::string         label_;
  };

  inline std::vector<Symbol> symbols(std::initializer_list<char const*> names) {
    std::vector<Symbol> out;
    for (auto n : names) {
      out.emplace_back(n);
    }
    return out;
  }

  // Art_{MNP} on a, b, c with relators {a,b}_M ({b,a}_M)^-1,
  // {b,c}_N ({c,b}_N)^-1 and {c,a}_P ({a,c}_P)^-1.
  inline Presentation triangle_artin(int M, int N, int P) {
    for (int label : {M, N, P}) {
      if (label < 2) {
        throw input_error("triangle Artin labels must be >= 2, got "
                          + std::to_string(label));
      }
    }
    GenSym a("a"), b("b"), c("c");
    auto   relator = [](GenSym g, GenSym h, int L) {
      return alternating_product(g, h, L)
             * alternating_product(h, g, L).inverse();
    };
    return Presentation(symbols({"a", "b", "c"}),
                        {relator(a, b, M), relator(b, c, N), relator(c, a, P)},
                        "Art(" + std::to_string(M) + "," + std::to_string(N)
                            + "," + std::to_string(P) + ")");
  }

  // Presentation B of Art_{2,3,2m} on b, c, x, y, alpha, delta.
  inline Presentation hanham_presentation(int m) {
    if (m < 3) {
      throw input_error("Hanham presentation needs m >= 3, got "
                        + std::to_string(m));
    }
    Word b = letter("b"), c = letter("c"), x = letter("x"), y = letter("y"),
         al = letter("alpha"), de = letter("delta");
    std::vector<Word> rels = {
        al * (x * c).inverse(),
        al * (b * x).inverse(),
        y * (b * c).inverse(),
        y * b * (c * y).inverse(),
        de * b * (c * de).inverse(),
        de * (al * x.pow(m - 2) * al).inverse(),
    };
    return Presentation(symbols({"b", "c", "x", "y", "alpha", "delta"}),
                        std::move(rels), "B(m=" + std::to_string(m) + ")");
  }

  inline Presentation infinite_cyclic(std::string_view generator = "t") {
    return Presentation({Symbol(generator)}, {}, "Z");
  }

  struct Abelianization {
    IntMatrix    exponent_sums;  // one row per relator
    AbelianGroup group;
  };

  inline IntMatrix exponent_sum_matrix(Presentation const& p) {
    IntMatrix m(p.relators().size(), p.generators().size());
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      for (std::size_t j = 0; j < p.generators().size(); ++j) {
        m(i, j) = exponent_sum(p.relators()[i], p.generators()[j]);
      }
    }
    return m;
  }

  inline Abelianization abelianization(Presentation const& p) {
    IntMatrix m = exponent_sum_matrix(p);
    return {m, cokernel(m)};
  }

  // ---------------------------------------------------------------------
  // Permutations (finite targets)
  // ---------------------------------------------------------------------

  // Acts on the right: i^(p*q) = (i^p)^q, so words evaluate left to right.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images)
        : images_(std::move(images)) {
      std::vector<bool> seen(images_.size(), false);
      for (auto i : images_) {
        if (i >= images_.size() || seen[i]) {
          throw input_error("not a permutation");
        }
        seen[i] = true;
      }
    }
    static Permutation identity(std::size_t degree) {
      std::vector<std::uint32_t> im(degree);
      std::iota(im.begin(), im.end(), 0u);
      return Permutation(std::move(im));
    }

    // "(1 2)(3 4 5)" with 1-based points.
    static Permutation from_cycles(std::string_view text, std::size_t degree) {
      Permutation p = identity(degree);
      std::size_t pos = 0;
      while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
          ++pos;
          continue;
        }
        if (text[pos] != '(') {
          throw input_error("bad cycle notation: " + std::string(text));
        }
        auto close = text.find(')', pos);
        if (close == std::string_view::npos) {
          throw input_error("bad cycle notation: " + std::string(text));
        }
        std::vector<std::uint32_t> cycle;
        std::string inner(text.substr(pos + 1, close - pos - 1));
        for (char& ch : inner) {
          if (ch == ',') {
            ch = ' ';
          }
        }
        std::size_t at = 0;
        while (at < inner.size()) {
          while (at < inner.size() && inner[at] == ' ') {
            ++at;
          }
          if (at >= inner.size()) {
            break;
          }
          std::size_t used = 0;
          long        v    = 0;
          try {
            v = std::stol(inner.substr(at), &used);
          } catch (std::logic_error const&) {
            throw input_error("bad cycle notation: " + std::string(text));
          }
          if (v < 1 || static_cast<std::size_t>(v) > degree) {
            throw input_error("cycle point out of range: " + std::string(text));
          }
          cycle.push_back(static_cast<std::uint32_t>(v - 1));
          at += used;
        }
        if (std::set<std::uint32_t>(cycle.begin(), cycle.end()).size() != cycle.size()) {
          throw input_error("cycle repeats a point: " + std::string(text));
        }
        Permutation c = identity(degree);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
        }
        p   = p * c;
        pos = close + 1;
      }
      return p;
    }

    std::size_t degree() const noexcept {
      return images_.size();
    }
    std::uint32_t operator[](std::size_t i) const {
      return images_[i];
    }
    std::vector<std::uint32_t> const& images() const noexcept {
      return images_;
    }
    bool is_identity() const {
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
          return false;
        }
      }
      return true;
    }
    Permutation inverse() const {
      std::vector<std::uint32_t> inv(images_.size());
      for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[images_[i]] = static_cast<std::uint32_t>(i);
      }
      return Permutation(std::move(inv));
    }
    friend Permutation operator*(Permutation const& p, Permutation const& q) {
      if (p.degree() != q.degree()) {
        throw input_error("permutation degree mismatch");
      }
      std::vector<std::uint32_t> out(p.degree());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = q.images_[p.images_[i]];
      }
      Permutation r;
      r.images_ = std::move(out);
      return r;
    }
    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<std::uint32_t> images_;
  };

  // ---------------------------------------------------------------------
  // Homomorphisms
  // ---------------------------------------------------------------------

  struct WordImages {
    Presentation           target;
    std::map<Symbol, Word> images;
  };

  struct PermutationImages {
    std::size_t                   degree = 0;
    std::map<Symbol, Permutation> images;
  };

  struct GroupHom {
    Presentation                              source;
    std::variant<WordImages, PermutationImages> target;

    void validate() const {
      for (auto g : source.generators()) {
        bool has = std::visit(
            [g](auto const& t) { return t.images.count(g) > 0; }, target);
        if (!has) {
          throw input_error("homomorphism has no image for generator "
                            + g.name());
        }
      }
      if (auto const* w = std::get_if<WordImages>(&target)) {
        for (auto const& [g, im] : w->images) {
          if (!w->target.contains(im)) {
            throw input_error("image of " + g.name()
                              + " uses a generator absent from the target");
          }
        }
      } else {
        auto const& p = std::get<PermutationImages>(target);
        for (auto const& [g, im] : p.images) {
          if (im.degree() != p.degree) {
            throw input_error("image of " + g.name()
                              + " has the wrong permutation degree");
          }
        }
      }
    }

    Word apply(Word const& w) const {
      auto const&         t = std::get<WordImages>(target);
      std::vector<GenSym> out;
      for (auto const& g : w) {
        auto it = t.images.find(g.sym);
        if (it == t.images.end()) {
          throw input_error("no image for generator " + g.name());
        }
        Word im = g.sign > 0 ? it->second : it->second.inverse();
        out.insert(out.end(), im.begin(), im.end());
      }
      return free_reduce(Word(std::move(out)));
    }

    Permutation apply_permutation(Word const& w) const {
      auto const& t = std::get<PermutationImages>(target);
      Permutation p = Permutation::identity(t.degree);
      for (auto const& g : w) {
        auto it = t.images.find(g.sym);
        if (it == t.images.end()) {
          throw input_error("no image for generator " + g.name());
        }
        p = p * (g.sign > 0 ? it->second : it->second.inverse());
      }
      return p;
    }
  };

  // ---------------------------------------------------------------------
  // Bounded triviality search
  // ---------------------------------------------------------------------

  struct SearchBudget {
    std::size_t max_depth  = 16;
    std::size_t max_length = 256;
    std::size_t max_nodes  = 400000;
  };

  enum class Triviality { trivial, unknown, nontrivial };

  inline char const* to_string(Triviality t) {
    switch (t) {
      case Triviality::trivial:
        return "trivial";
      case Triviality::unknown:
        return "unknown";
      case Triviality::nontrivial:
        return "nontrivial";
    }
    return "unknown";
  }

  // Insertion of the rotation by `rotation` of relator^exponent at
  // `position` of the current word, followed by free reduction. Equivalently
  // the current word is left-multiplied by conjugator * r^e * conjugator^-1.
  struct CertificateStep {
    std::size_t relator  = 0;
    int         exponent = 1;
    std::size_t rotation = 0;
    std::size_t position = 0;
    Word        conjugator;
  };

  struct TrivialityVerdict {
    Triviality                   status = Triviality::unknown;
    std::vector<CertificateStep> certificate;
    std::size_t                  nodes_expanded = 0;
  };

  namespace detail {
    inline Word relator_power(Presentation const& p, std::size_t r, int e) {
      Word const& w = p.cyclic_relators().at(r);
      return e > 0 ? w : w.inverse();
    }

    inline Word insert_and_reduce(Word const& w, Word const& piece,
                                  std::size_t position) {
      return free_reduce(w.subword(0, position) * piece
                         * w.subword(position, w.size() - position));
    }
  }  // namespace detail

  // Replays the insertion certificate and, independently, the product of
  // conjugates. True iff both routes reduce w to the empty word.
  inline bool replay_certificate(Word const&                         w,
                                 Presentation const&                 p,
                                 std::vector<CertificateStep> const& cert) {
    Word current = free_reduce(w);
    Word product = current;
    for (auto const& step : cert) {
      if (step.relator >= p.relators().size()
          || step.position > current.size()) {
        return false;
      }
      Word r = detail::relator_power(p, step.relator, step.exponent);
      current
          = detail::insert_and_reduce(current, rotate(r, step.rotation),
                                      step.position);
      product = free_reduce(step.conjugator * r * step.conjugator.inverse()
                            * product);
    }
    return current.empty() && product.empty();
  }

  // Best-first search over insertions of cyclic conjugates of relators and
  // their inverses that cancel at least one letter. Words are expanded in
  // order (length, depth, lexicographic), so verdict and certificate are
  // deterministic. Unknown never claims nontriviality.
  inline TrivialityVerdict bounded_trivial(Word const&         w,
                                           Presentation const& p,
                                           SearchBudget const& budget = {}) {
    if (!p.contains(w)) {
      throw input_error("word " + to_string(w)
                        + " uses generators outside the presentation");
    }
    TrivialityVerdict verdict;
    Word              start = free_reduce(w);
    if (start.empty()) {
      verdict.status = Triviality::trivial;
      return verdict;
    }
    if (p.generators().size() > 120) {
      throw input_error("too many generators for the triviality search");
    }

    using code_t = std::string;
    auto encode  = [&p](Word const& x) {
      code_t out;
      out.reserve(x.size());
      for (auto const& g : x) {
        out.push_back(static_cast<char>((p.index_of(g.sym) + 1) * g.sign));
      }
      return out;
    };
    auto decode = [&p](code_t const& x) {
      std::vector<GenSym> out;
      out.reserve(x.size());
      for (char c : x) {
        int v = static_cast<signed char>(c);
        out.emplace_back(p.generators()[static_cast<std::size_t>(
                             (v < 0 ? -v : v) - 1)],
                         v < 0 ? -1 : 1);
      }
      return Word(std::move(out));
    };

    struct Piece {
      code_t      code;
      std::size_t relator;
      int         exponent;
      std::size_t rotation;
    };
    std::vector<Piece>                 pieces;
    std::unordered_set<code_t>         seen_pieces;
    for (std::size_t r = 0; r < p.cyclic_relators().size(); ++r) {
      for (int e : {1, -1}) {
        Word rel = detail::relator_power(p, r, e);
        for (std::size_t k = 0; k < rel.size(); ++k) {
          code_t c = encode(rotate(rel, k));
          if (seen_pieces.insert(c).second) {
            pieces.push_back({c, r, e, k});
          }
        }
      }
    }

    struct Node {
      code_t      word;
      std::size_t parent;
      std::size_t piece;
      std::size_t position;
      std::size_t depth;
    };
    std::vector<Node>                       nodes;
    std::unordered_map<code_t, std::size_t> seen;
    auto cmp = [&nodes](std::size_t a, std::size_t b) {
      auto const& x = nodes[a];
      auto const& y = nodes[b];
      if (x.word.size() != y.word.size()) {
        return x.word.size() > y.word.size();
      }
      if (x.depth != y.depth) {
        return x.depth > y.depth;
      }
      return x.word > y.word;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)>
        open(cmp);

    nodes.push_back({encode(start), SIZE_MAX, 0, 0, 0});
    seen.emplace(nodes.front().word, 0);
    open.push(0);

    std::size_t found = SIZE_MAX;
    code_t      next;
    while (!open.empty() && found == SIZE_MAX
           && verdict.nodes_expanded < budget.max_nodes) {
      std::size_t id = open.top();
      open.pop();
      ++verdict.nodes_expanded;
      if (nodes[id].depth >= budget.max_depth) {
        continue;
      }
      code_t const cur = nodes[id].word;
      std::size_t  depth = nodes[id].depth;
      for (std::size_t pos = 0; pos <= cur.size() && found == SIZE_MAX; ++pos) {
        for (std::size_t k = 0; k < pieces.size(); ++k) {
          code_t const& piece = pieces[k].code;
          bool left  = pos > 0 && cur[pos - 1] == -piece.front();
          bool right = pos < cur.size() && cur[pos] == -piece.back();
          if (!left && !right) {
            continue;
          }
          next.clear();
          auto push = [&next](char c) {
            if (!next.empty() && next.back() == -c) {
              next.pop_back();
            } else {
              next.push_back(c);
            }
          };
          for (std::size_t i = 0; i < pos; ++i) {
            next.push_back(cur[i]);
          }
          for (char c : piece) {
            push(c);
          }
          for (std::size_t i = pos; i < cur.size(); ++i) {
            push(cur[i]);
          }
          if (next.size() > budget.max_length || seen.count(next) > 0) {
            continue;
          }
          std::size_t nid = nodes.size();
          nodes.push_back({next, id, k, pos, depth + 1});
          seen.emplace(next, nid);
          if (next.empty()) {
            found = nid;
            break;
          }
          open.push(nid);
        }
      }
    }

    if (found == SIZE_MAX) {
      verdict.status = Triviality::unknown;
      return verdict;
    }

    std::vector<std::size_t> chain;
    for (std::size_t id = found; id != 0; id = nodes[id].parent) {
      chain.push_back(id);
    }
    std::reverse(chain.begin(), chain.end());
    for (std::size_t id : chain) {
      Node const&  n     = nodes[id];
      Piece const& piece = pieces[n.piece];
      Word         prev  = decode(nodes[n.parent].word);
      Word         rel   = detail::relator_power(p, piece.relator,
                                                 piece.exponent);
      Word         conj  = free_reduce(
          prev.subword(0, n.position)
          * rel.subword(0, piece.rotation).inverse());
      verdict.certificate.push_back(
          {piece.relator, piece.exponent, piece.rotation, n.position, conj});
    }
    if (!replay_certificate(w, p, verdict.certificate)) {
      throw invariant_error("triviality certificate failed to replay for "
                            + to_string(w));
    }
    verdict.status = Triviality::trivial;
    return verdict;
  }

  struct RelatorCheck {
    Word              relator;
    Word              image;  // reduced image (empty for permutation targets)
    TrivialityVerdict verdict;
  };

  // Applies h to every source relator and decides triviality of the image:
  // exactly for permutation targets and for the infinite cyclic target (by
  // exponent sum), by bounded search otherwise.
  inline std::vector<RelatorCheck> check_hom(GroupHom const&     h,
                                             SearchBudget const& budget = {}) {
    h.validate();
    std::vector<RelatorCheck> out;
    for (auto const& r : h.source.relators()) {
      RelatorCheck rc{r, {}, {}};
      if (std::holds_alternative<PermutationImages>(h.target)) {
        rc.verdict.status = h.apply_permutation(r).is_identity()
                                ? Triviality::trivial
                                : Triviality::nontrivial;
      } else {
        auto const& t = std::get<WordImages>(h.target);
        rc.image      = h.apply(r);
        if (t.target.generators().size() == 1 && t.target.relators().empty()) {
          rc.verdict.status = degree(rc.image) == 0 ? Triviality::trivial
                                                    : Triviality::nontrivial;
        } else {
          rc.verdict = bounded_trivial(rc.image, t.target, budget);
        }
      }
      out.push_back(std::move(rc));
    }
    return out;
  }

  // phi: Art_{2,3,2m} -> B and psi: B -> Art_{2,3,2m}. The Artin group is
  // triangle_artin(2m, 3, 2): (ab)^m = (ba)^m, bcb = cbc, ca = ac.
  inline GroupHom hanham_phi(int m) {
    WordImages t{hanham_presentation(m), {}};
    t.images[Symbol("a")] = parse_word("B C x c");
    t.images[Symbol("b")] = parse_word("b");
    t.images[Symbol("c")] = parse_word("c");
    return GroupHom{triangle_artin(2 * m, 3, 2), std::move(t)};
  }

  inline GroupHom hanham_psi(int m) {
    WordImages t{triangle_artin(2 * m, 3, 2), {}};
    t.images[Symbol("b")]     = parse_word("b");
    t.images[Symbol("c")]     = parse_word("c");
    t.images[Symbol("x")]     = parse_word("c b a C");
    t.images[Symbol("y")]     = parse_word("b c");
    t.images[Symbol("alpha")] = parse_word("b c b a C");
    t.images[Symbol("delta")] = parse_word("b c") * parse_word("b a").pow(m);
    return GroupHom{hanham_presentation(m), std::move(t)};
  }

}  // namespace artin
