#pragma once

// Reidemeister-Schreier rewriting for kernels of the degree map, over the
// Schreier transversal {a^i : i in Z} (shifts kept symbolic) or over
// {a^0, ..., a^(n-1)} for the kernel of the degree map reduced mod n.

#include <string>
#include <variant>
#include <vector>

#include "artin/error.hpp"
#include "artin/laurent.hpp"
#include "artin/presentations.hpp"
#include "artin/words.hpp"

namespace artin {

  // s_{a^shift, generator}
  struct SchreierGenerator {
    int    shift = 0;
    Symbol generator;

    friend bool operator==(SchreierGenerator const&,
                           SchreierGenerator const&) = default;
    friend auto operator<=>(SchreierGenerator const&,
                            SchreierGenerator const&) = default;
  };

  struct SchreierLetter {
    SchreierGenerator gen;
    int               sign = 1;

    friend bool operator==(SchreierLetter const&, SchreierLetter const&) = default;
  };

  using RewrittenWord = std::vector<SchreierLetter>;

  struct InfiniteShift {};
  struct Modulo {
    int n = 1;
  };
  using Transversal = std::variant<InfiniteShift, Modulo>;

  inline std::string to_string(SchreierGenerator const& s) {
    return "s_{" + std::to_string(s.shift) + "," + s.generator.name() + "}";
  }

  inline std::string to_string(RewrittenWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& l : w) {
      if (!out.empty()) {
        out += " ";
      }
      out += to_string(l.gen);
      if (l.sign < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  inline RewrittenWord reduce(RewrittenWord const& w) {
    RewrittenWord out;
    for (auto const& l : w) {
      if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  namespace detail {
    inline int floor_mod(int x, int n) {
      int r = x % n;
      return r < 0 ? r + n : r;
    }
  }  // namespace detail

  // tau(w): each letter g^e whose prefix has degree d becomes
  // s_{a^d, g} (e = +1) or s_{a^(d-1), g}^-1 (e = -1). Letters of the pivot
  // generator give trivial symbols over the infinite transversal; modulo n
  // only s_{a^(n-1), a} = a^n survives.
  inline RewrittenWord rewrite_tau(Word const&        w,
                                   Transversal const& transversal,
                                   Symbol             pivot = Symbol("a")) {
    int const total = degree(w);
    if (auto const* m = std::get_if<Modulo>(&transversal)) {
      if (m->n < 1) {
        throw input_error("modulus must be positive");
      }
      if (detail::floor_mod(total, m->n) != 0) {
        throw input_error("word " + to_string(w) + " has degree residue "
                          + std::to_string(detail::floor_mod(total, m->n))
                          + " mod " + std::to_string(m->n)
                          + "; it is not in the kernel");
      }
    } else if (total != 0) {
      throw input_error("word " + to_string(w) + " has degree "
                        + std::to_string(total)
                        + "; it is not in the kernel of the degree map");
    }

    RewrittenWord out;
    int           prefix = 0;
    for (auto const& g : w) {
      int shift = g.sign > 0 ? prefix : prefix - 1;
      prefix += g.sign;
      if (auto const* m = std::get_if<Modulo>(&transversal)) {
        shift = detail::floor_mod(shift, m->n);
        if (g.sym == pivot && shift != m->n - 1) {
          continue;
        }
      } else if (g.sym == pivot) {
        continue;
      }
      out.push_back({{shift, g.sym}, g.sign});
    }
    return out;
  }

  // K g (overline{K g})^-1 with K = a^shift, as a word in the original
  // generators.
  inline Word expand(SchreierGenerator const& s, Transversal const& transversal,
                     Symbol pivot = Symbol("a")) {
    int next = s.shift + 1;
    if (auto const* m = std::get_if<Modulo>(&transversal)) {
      next = detail::floor_mod(next, m->n);
    }
    Word a{GenSym(pivot, 1)};
    return a.pow(s.shift) * Word{GenSym(s.generator, 1)} * a.pow(-next);
  }

  inline Word expand(RewrittenWord const& w, Transversal const& transversal,
                     Symbol pivot = Symbol("a")) {
    Word out;
    for (auto const& l : w) {
      Word piece = expand(l.gen, transversal, pivot);
      out        = out * (l.sign > 0 ? piece : piece.inverse());
    }
    return free_reduce(out);
  }

  // Abelianized tau(w) as a vector over Z[t, t^-1] indexed by `basis`:
  // s_{a^d, g}^e contributes e t^d to the component of g.
  inline LaurentVector abelianize(RewrittenWord const&       w,
                                  std::vector<Symbol> const& basis) {
    LaurentVector v(basis.size());
    for (auto const& l : w) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] == l.gen.generator) {
          v[i].add_term(l.gen.shift, l.sign);
        }
      }
    }
    return v;
  }

  // One normalized relation vector in (S_b, S_c) per triangle relator.
  // Degree-shifted conjugates are t-multiples of these rows.
  inline std::vector<LaurentVector> kernel_relator_rows(int M, int N, int P) {
    Presentation const        p     = triangle_artin(M, N, P);
    std::vector<Symbol> const basis = {Symbol("b"), Symbol("c")};
    std::vector<LaurentVector> rows;
    for (auto const& r : p.relators()) {
      rows.push_back(normalize(abelianize(rewrite_tau(r, InfiniteShift{}), basis)));
    }
    return rows;
  }

  inline Symbol schreier_symbol(int shift, Symbol g) {
    return Symbol("s_" + std::to_string(shift) + "_" + g.name());
  }

  // Presentation of the kernel of p -> Z/n (every generator to 1) on
  // s_{a^i, g} (0 <= i < n, g != a) and s_{a^(n-1), a}, with relators
  // tau(a^i r a^-i).
  inline Presentation finite_cover_presentation(Presentation const& p, int n,
                                                Symbol pivot = Symbol("a")) {
    if (n < 1) {
      throw input_error("cover degree must be >= 1");
    }
    if (p.index_of(pivot) < 0) {
      throw input_error("presentation has no generator " + pivot.name());
    }
    for (auto const& r : p.relators()) {
      if (detail::floor_mod(degree(r), n) != 0) {
        throw input_error("relator " + to_string(r)
                          + " does not lie in the kernel");
      }
    }
    std::vector<Symbol> gens;
    for (int i = 0; i < n; ++i) {
      for (auto g : p.generators()) {
        if (g != pivot) {
          gens.push_back(schreier_symbol(i, g));
        }
      }
    }
    gens.push_back(schreier_symbol(n - 1, pivot));

    Transversal const  t = Modulo{n};
    Word const         a{GenSym(pivot, 1)};
    std::vector<Word>  relators;
    for (int i = 0; i < n; ++i) {
      for (auto const& r : p.relators()) {
        std::vector<GenSym> letters;
        for (auto const& l : rewrite_tau(a.pow(i) * r * a.pow(-i), t, pivot)) {
          letters.emplace_back(schreier_symbol(l.gen.shift, l.gen.generator),
                               l.sign);
        }
        Word w = free_reduce(Word(std::move(letters)));
        if (!w.empty()) {
          relators.push_back(std::move(w));
        }
      }
    }
    return Presentation(std::move(gens), std::move(relators),
                        p.label() + " cover n=" + std::to_string(n));
  }

}  // namespace artin
