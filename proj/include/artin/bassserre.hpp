#pragma once

// Normal forms in Z/j * Z/2 = <u> * <v> and in the amalgam
// <x> *_{x^(2m+1) = s^2} <s>, with the word-level checks behind the
// epimorphism Art_{2,3,6k+3} -> Z/3 * Z/2 and the dihedral change of
// generators a = x^-m s, b = s^-1 x^(m+1).

#include <cstddef>
#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/error.hpp"
#include "artin/presentations.hpp"
#include "artin/words.hpp"

namespace artin {

  // ---------------------------------------------------------------------
  // Z/j * Z/2
  // ---------------------------------------------------------------------

  struct Syllable {
    int factor   = 0;  // 0: <u> of order j, 1: <v> of order 2
    int exponent = 1;  // 1 <= exponent < order

    friend bool operator==(Syllable const&, Syllable const&) = default;
  };

  class FreeProductElement {
   public:
    explicit FreeProductElement(int j = 3) : j_(j) {
      if (j < 2) {
        throw input_error("Z/j * Z/2 needs j >= 2");
      }
    }

    static FreeProductElement u(int j, int e = 1) {
      FreeProductElement g(j);
      g.append(0, e);
      return g;
    }
    static FreeProductElement v(int j) {
      FreeProductElement g(j);
      g.append(1, 1);
      return g;
    }

    int j() const noexcept {
      return j_;
    }
    std::vector<Syllable> const& syllables() const noexcept {
      return syllables_;
    }
    bool is_identity() const noexcept {
      return syllables_.empty();
    }

    // Multiplies on the right by the generator of `factor` to the power e.
    void append(int factor, int e) {
      int const order = factor == 0 ? j_ : 2;
      e               = ((e % order) + order) % order;
      if (e == 0) {
        return;
      }
      if (!syllables_.empty() && syllables_.back().factor == factor) {
        int f = (syllables_.back().exponent + e) % order;
        if (f == 0) {
          syllables_.pop_back();
        } else {
          syllables_.back().exponent = f;
        }
      } else {
        syllables_.push_back({factor, e});
      }
    }

    FreeProductElement inverse() const {
      FreeProductElement out(j_);
      for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
        out.append(it->factor, -it->exponent);
      }
      return out;
    }

    friend FreeProductElement freeprod_multiply(FreeProductElement const& g,
                                                FreeProductElement const& h);

    friend bool operator==(FreeProductElement const&, FreeProductElement const&) = default;

   private:
    int                   j_ = 3;
    std::vector<Syllable> syllables_;
  };

  inline FreeProductElement freeprod_multiply(FreeProductElement const& g,
                                              FreeProductElement const& h) {
    if (g.j_ != h.j_) {
      throw input_error("free product elements of different groups");
    }
    FreeProductElement out = g;
    for (auto const& s : h.syllables_) {
      out.append(s.factor, s.exponent);
    }
    return out;
  }

  inline FreeProductElement operator*(FreeProductElement const& g,
                                      FreeProductElement const& h) {
    return freeprod_multiply(g, h);
  }

  inline std::string to_string(FreeProductElement const& g) {
    if (g.is_identity()) {
      return "1";
    }
    std::string out;
    for (auto const& s : g.syllables()) {
      out += s.factor == 0 ? "u" : "v";
      if (s.exponent != 1) {
        out += "^" + std::to_string(s.exponent);
      }
    }
    return out;
  }

  // Evaluates a word whose letters map to free product elements.
  inline FreeProductElement evaluate(Word const& w,
                                     std::map<Symbol, FreeProductElement> const& images,
                                     int j) {
    FreeProductElement out(j);
    for (auto const& g : w) {
      auto it = images.find(g.sym);
      if (it == images.end()) {
        throw input_error("no image for generator " + g.name());
      }
      out = out * (g.sign > 0 ? it->second : it->second.inverse());
    }
    return out;
  }

  // Vertex g<u> or g<v> of the Bass-Serre tree, keyed by the normal form of
  // g with any trailing syllable of the stabilizing factor removed.
  struct TreeVertex {
    FreeProductElement representative;
    int                factor = 0;

    static TreeVertex of(FreeProductElement g, int factor) {
      auto syl = g.syllables();
      FreeProductElement rep(g.j());
      for (std::size_t i = 0; i < syl.size(); ++i) {
        if (i + 1 == syl.size() && syl[i].factor == factor) {
          break;
        }
        rep.append(syl[i].factor, syl[i].exponent);
      }
      return {rep, factor};
    }

    TreeVertex moved_by(FreeProductElement const& g) const {
      return of(g * representative, factor);
    }

    friend bool operator==(TreeVertex const&, TreeVertex const&) = default;
  };

  // ---------------------------------------------------------------------
  // The epimorphism Art_{2,3,6k+3} -> Z/3 * Z/2
  // ---------------------------------------------------------------------

  // Art_{2,3,6k+3} on x = ab, y = cb, s1 = b(ab)^(3k+1), s2 = bcb.
  inline Presentation epi_presentation(int k) {
    if (k < 1) {
      throw input_error("k must be >= 1");
    }
    Word const x = letter("x"), y = letter("y");
    Word const s1 = Word{GenSym("s1")}, s2 = Word{GenSym("s2")};
    std::vector<Word> relators = {
        x.pow(6 * k + 3) * s1.pow(-2),
        y.pow(3) * s2.pow(-2),
        s1 * y.inverse()
            * (x.pow(3 * k + 1) * y.inverse() * s2 * x.pow(-3 * k - 1) * s1
               * s2.inverse())
                  .inverse(),
    };
    return Presentation({Symbol("x"), Symbol("y"), Symbol("s1"), Symbol("s2")},
                        std::move(relators),
                        "Art(2,3," + std::to_string(6 * k + 3) + ") on x,y,s1,s2");
  }

  // x, y -> u and s1, s2 -> v; `y_image` overrides the image of y.
  inline std::map<Symbol, FreeProductElement> epi_images(
      std::optional<FreeProductElement> y_image = std::nullopt) {
    auto const u = FreeProductElement::u(3), v = FreeProductElement::v(3);
    return {{Symbol("x"), u},
            {Symbol("y"), y_image.value_or(u)},
            {Symbol("s1"), v},
            {Symbol("s2"), v}};
  }

  struct FreeProductCheck {
    bool                            relators_ok = false;
    bool                            surjective  = false;
    std::vector<FreeProductElement> relator_images;

    bool ok() const noexcept {
      return relators_ok && surjective;
    }
  };

  inline FreeProductCheck check_hom_to_freeprod(
      int k, std::map<Symbol, FreeProductElement> const& images) {
    Presentation const p = epi_presentation(k);
    FreeProductCheck   out;
    out.relators_ok = true;
    for (auto const& r : p.relators()) {
      auto im = evaluate(r, images, 3);
      out.relators_ok = out.relators_ok && im.is_identity();
      out.relator_images.push_back(std::move(im));
    }
    bool has_u = false, has_v = false;
    for (auto const& [g, im] : images) {
      has_u = has_u || im == FreeProductElement::u(3);
      has_v = has_v || im == FreeProductElement::v(3);
    }
    out.surjective = has_u && has_v;
    return out;
  }

  inline bool check_hom_to_freeprod(int k) {
    return check_hom_to_freeprod(k, epi_images()).ok();
  }

  // Images of a, b, c solving ab = cb = u and b(ab)^(3k+1) = bcb = v.
  inline std::map<Symbol, FreeProductElement> epi_abc_images(int k) {
    auto const u = FreeProductElement::u(3), v = FreeProductElement::v(3);
    auto const a = FreeProductElement::u(3, -3 * k - 1) * v;
    auto const b = v * FreeProductElement::u(3, 3 * k + 2);
    return {{Symbol("a"), a}, {Symbol("b"), b}, {Symbol("c"), a}};
  }

  struct FixedVertexReport {
    std::vector<Word>               words;  // in a, b, c
    std::vector<FreeProductElement> images;
    std::vector<bool>               fixes_base_edge;
    bool                            abc_images_consistent = false;

    bool ok() const {
      return abc_images_consistent
             && std::all_of(fixes_base_edge.begin(), fixes_base_edge.end(),
                            [](bool b) { return b; });
    }
  };

  // The edge-stabilizer words (ab)(cb)^-1, (cb)^-1 (ab)^(3k+1),
  // (cb)(ab)^(-3k-1), (cb)^3, (ab)^(6k+3), pushed into Z/3 * Z/2 through
  // images of a, b, c, each tested against both ends of the base edge.
  inline FixedVertexReport fixed_vertex_images(int k) {
    if (k < 1) {
      throw input_error("k must be >= 1");
    }
    auto const images = epi_abc_images(k);
    Word const x = parse_word("ab"), y = parse_word("cb");

    FixedVertexReport r;
    // the a, b, c images must respect Art_{2,3,6k+3} and give x -> u, s1 -> v
    Presentation const art = triangle_artin(6 * k + 3, 3, 2);
    r.abc_images_consistent =
        std::all_of(art.relators().begin(), art.relators().end(),
                    [&](Word const& rel) { return evaluate(rel, images, 3).is_identity(); })
        && evaluate(x, images, 3) == FreeProductElement::u(3)
        && evaluate(y, images, 3) == FreeProductElement::u(3)
        && evaluate(Word{GenSym("b")} * x.pow(3 * k + 1), images, 3)
               == FreeProductElement::v(3)
        && evaluate(parse_word("bcb"), images, 3) == FreeProductElement::v(3);

    r.words = {x * y.inverse(), y.inverse() * x.pow(3 * k + 1),
               y * x.pow(-3 * k - 1), y.pow(3), x.pow(6 * k + 3)};
    auto const origin_u = TreeVertex::of(FreeProductElement(3), 0);
    auto const origin_v = TreeVertex::of(FreeProductElement(3), 1);
    for (auto const& w : r.words) {
      auto im = evaluate(w, images, 3);
      r.fixes_base_edge.push_back(origin_u.moved_by(im) == origin_u
                                  && origin_v.moved_by(im) == origin_v);
      r.images.push_back(std::move(im));
    }
    return r;
  }

  // ---------------------------------------------------------------------
  // The dihedral amalgam <x> *_{x^(2m+1) = s^2} <s>
  // ---------------------------------------------------------------------

  // z^central followed by alternating syllables x^e (1 <= e <= 2m) and s.
  struct AmalgamElement {
    int                 m       = 1;
    long long           central = 0;
    std::vector<int>    syllables;  // e > 0 for x^e, 0 for s

    bool is_identity() const noexcept {
      return central == 0 && syllables.empty();
    }

    void append_x(int sign) {
      int const top = 2 * m + 1;
      if (!syllables.empty() && syllables.back() > 0) {
        int e = syllables.back() + sign;
        if (e == 0) {
          syllables.pop_back();
        } else if (e == top) {
          syllables.pop_back();
          ++central;
        } else {
          syllables.back() = e;
        }
      } else if (sign > 0) {
        syllables.push_back(1);
      } else {
        // x^-1 = z^-1 x^(2m)
        --central;
        syllables.push_back(2 * m);
      }
    }

    void append_s(int sign) {
      if (sign < 0) {
        --central;  // s^-1 = z^-1 s
      }
      if (!syllables.empty() && syllables.back() == 0) {
        syllables.pop_back();
        ++central;
      } else {
        syllables.push_back(0);
      }
    }

    friend bool operator==(AmalgamElement const&, AmalgamElement const&) = default;
  };

  inline std::string to_string(AmalgamElement const& g) {
    std::string out;
    if (g.central != 0) {
      out = "z";
      if (g.central != 1) {
        out += "^" + std::to_string(g.central);
      }
    }
    for (int e : g.syllables) {
      out += e == 0 ? "s" : (e == 1 ? "x" : "x^" + std::to_string(e));
    }
    return out.empty() ? "1" : out;
  }

  inline AmalgamElement amalgam_normalize(Word const& w, int m) {
    if (m < 1) {
      throw input_error("amalgam needs m >= 1");
    }
    AmalgamElement g;
    g.m = m;
    for (auto const& l : w) {
      if (l.sym == Symbol("x")) {
        g.append_x(l.sign);
      } else if (l.sym == Symbol("s")) {
        g.append_s(l.sign);
      } else {
        throw input_error("amalgam words use x and s only, got " + l.name());
      }
    }
    return g;
  }

  inline AmalgamElement operator*(AmalgamElement const& g, AmalgamElement const& h) {
    if (g.m != h.m) {
      throw input_error("amalgam elements for different m");
    }
    AmalgamElement out = g;
    out.central += h.central;  // z is central
    for (int e : h.syllables) {
      if (e == 0) {
        out.append_s(1);
      } else {
        for (int i = 0; i < e; ++i) {
          out.append_x(1);
        }
      }
    }
    return out;
  }

  struct DihedralCheck {
    bool relator_trivial = false;
    bool ab_is_x         = false;
    bool s_recovered     = false;

    bool ok() const noexcept {
      return relator_trivial && ab_is_x && s_recovered;
    }
  };

  // Substitutes a -> x^-m s and b -> s^-1 x^(m+1) (or x^m when corrupted)
  // into {a,b}_{2m+1} ({b,a}_{2m+1})^-1.
  inline DihedralCheck verify_dihedral_generators(int m, bool corrupted) {
    if (m < 1) {
      throw input_error("dihedral check needs m >= 1");
    }
    Word const x = letter("x"), s = letter("s");
    Word const a_img = x.pow(-m) * s;
    Word const b_img = s.inverse() * x.pow(corrupted ? m : m + 1);
    auto subst = [&](Word const& w) {
      Word out;
      for (auto const& l : w) {
        Word im = l.sym == Symbol("a") ? a_img : b_img;
        out     = out * (l.sign > 0 ? im : im.inverse());
      }
      return out;
    };
    GenSym const a("a"), b("b");
    Word const   rel = alternating_product(a, b, 2 * m + 1)
                     * alternating_product(b, a, 2 * m + 1).inverse();
    DihedralCheck r;
    r.relator_trivial = amalgam_normalize(subst(rel), m).is_identity();
    r.ab_is_x = amalgam_normalize(subst(parse_word("ab")), m) == amalgam_normalize(x, m);
    r.s_recovered = amalgam_normalize(subst(parse_word("ab").pow(m) * parse_word("a")), m)
                    == amalgam_normalize(s, m);
    return r;
  }

  inline bool verify_dihedral_generators(int m) {
    return verify_dihedral_generators(m, false).ok();
  }

}  // namespace artin
