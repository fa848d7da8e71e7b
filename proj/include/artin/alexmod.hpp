#pragma once

// Modules over Z[t, t^-1] presented by relation rows, and the decision
// procedure for whether such a module is zero. Applied to the abelianized
// kernel of the degree map of a triangle Artin group it decides perfectness
// of that kernel.
//
// A finitely presented module is zero iff its Fitting ideal (generated by the
// maximal minors) is the unit ideal. Maximal ideals of Z[t, t^-1] have the
// form (p, f); the procedure looks for one containing every minor:
//
//   1. a common factor over Q means a common complex root, hence some (p, f);
//   2. otherwise the minors generate a nonzero integer D, and only primes
//      dividing D can host a maximal ideal above the minors, so it suffices
//      to take gcds of the minors over Z/p for p | D.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "artin/error.hpp"
#include "artin/intlinalg.hpp"
#include "artin/laurent.hpp"
#include "artin/presentations.hpp"
#include "artin/rs.hpp"

namespace artin {

  struct ModulePresentation {
    std::size_t                generators = 2;
    std::vector<LaurentVector> rows;

    ModulePresentation() = default;
    ModulePresentation(std::size_t g, std::vector<LaurentVector> r)
        : generators(g), rows(std::move(r)) {
      for (auto& row : rows) {
        if (row.size() != generators) {
          throw input_error("module row has " + std::to_string(row.size())
                            + " entries, expected "
                            + std::to_string(generators));
        }
        row = normalize(std::move(row));
      }
    }
  };

  enum class WitnessKind {
    unit_ideal,       // module is zero; certificate D and prime checks
    rational_factor,  // common factor of the minors over Q
    prime_factor,     // common factor of the minors over Z/p
    rank_deficient,   // every maximal minor vanishes
  };

  struct ModuleVerdict {
    bool        trivial = false;
    WitnessKind kind    = WitnessKind::rank_deficient;

    // rational_factor: a factor of the rational gcd of the minors;
    // prime_factor: a monic factor over Z/prime (coefficients in [0, p)).
    LaurentPoly factor;
    bool        factor_irreducible = false;
    BigInt      prime;

    // unit_ideal: D in the Fitting ideal, and the moduli examined.
    BigInt              certificate;
    std::vector<BigInt> primes_checked;
    std::vector<BigInt> composite_moduli_checked;

    std::string witness_string() const {
      switch (kind) {
        case WitnessKind::unit_ideal:
          return "D=" + certificate.str();
        case WitnessKind::rational_factor:
          return to_string(factor);
        case WitnessKind::prime_factor:
          return "p=" + prime.str() + ":" + to_string(factor);
        case WitnessKind::rank_deficient:
          return "rank-deficient";
      }
      return "";
    }
  };

  namespace detail {

    inline LaurentPoly determinant(std::vector<LaurentVector> const& m) {
      std::size_t const n = m.size();
      if (n == 1) {
        return m[0][0];
      }
      if (n == 2) {
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
      }
      LaurentPoly total;
      for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) {
          continue;
        }
        std::vector<LaurentVector> minor;
        for (std::size_t i = 1; i < n; ++i) {
          LaurentVector row;
          for (std::size_t k = 0; k < n; ++k) {
            if (k != j) {
              row.push_back(m[i][k]);
            }
          }
          minor.push_back(std::move(row));
        }
        LaurentPoly term = m[0][j] * determinant(minor);
        total            = j % 2 == 0 ? total + term : total - term;
      }
      return total;
    }

    // Maximal minors as polynomials in Z[t] with nonzero constant term,
    // deduplicated up to units; zero minors dropped.
    inline std::vector<poly::ZPoly> maximal_minors(ModulePresentation const& m) {
      std::set<std::vector<BigInt>> seen;
      std::vector<poly::ZPoly>      out;
      std::size_t const             g = m.generators;
      if (m.rows.size() < g || g == 0) {
        return out;
      }
      std::vector<std::size_t> pick(g);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        std::vector<LaurentVector> sub;
        for (auto i : pick) {
          sub.push_back(m.rows[i]);
        }
        LaurentPoly d = determinant(sub);
        if (!d.is_zero()) {
          auto dense = d.normalized().dense_after_shift();
          if (seen.insert(dense).second) {
            out.push_back(std::move(dense));
          }
        }
        // next combination
        std::size_t k = g;
        while (k > 0 && pick[k - 1] == m.rows.size() - g + k - 1) {
          --k;
        }
        if (k == 0) {
          break;
        }
        ++pick[k - 1];
        for (std::size_t j = k; j < g; ++j) {
          pick[j] = pick[j - 1] + 1;
        }
      }
      return out;
    }

    inline LaurentPoly to_laurent(poly::ZPoly const& p) {
      return LaurentPoly::from_dense(p);
    }

    // An irreducible factor of f over Q when one can be certified: a
    // cyclotomic factor or a rational root. Otherwise f itself.
    inline std::pair<poly::ZPoly, bool> rational_factor(poly::ZPoly const& f) {
      int const deg = poly::degree(f);
      for (int k = 1; k <= 4 * deg * deg + 8; ++k) {
        auto phi = poly::cyclotomic(k);
        if (poly::degree(phi) > deg) {
          continue;
        }
        if (poly::divide_exact(f, phi)) {
          return {phi, true};
        }
      }
      // rational roots r = u / v with u | f(0), v | lc(f)
      auto divisors = [](BigInt n) {
        std::vector<BigInt> out;
        n = abs(n);
        for (BigInt d = 1; d * d <= n && d < 100000; ++d) {
          if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
          }
        }
        return out;
      };
      if (deg >= 1 && f.front() != 0) {
        for (auto const& u : divisors(f.front())) {
          for (auto const& v : divisors(f.back())) {
            for (int s : {1, -1}) {
              poly::ZPoly linear{BigInt(-s * u), v};  // v t - s u
              if (poly::divide_exact(f, poly::primitive_part(linear))) {
                return {poly::primitive_part(linear), true};
              }
            }
          }
        }
      }
      return {f, deg == 1};
    }

    inline BigInt lcm(BigInt const& a, BigInt const& b) {
      return a / gcd(a, b) * b;
    }

    inline bool is_probable_prime(BigInt const& n) {
      if (n < 2) {
        return false;
      }
      for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) {
          return n == p;
        }
      }
      BigInt d = n - 1;
      int    s = 0;
      while (d % 2 == 0) {
        d /= 2;
        ++s;
      }
      for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) {
          continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
          x = powm(x, BigInt(2), n);
          if (x == n - 1) {
            composite = false;
            break;
          }
        }
        if (composite) {
          return false;
        }
      }
      return true;
    }

    // Pollard rho with a fixed iteration cap; nullopt when no split found.
    inline std::optional<BigInt> pollard_rho(BigInt const& n) {
      if (n % 2 == 0) {
        return BigInt(2);
      }
      for (int c = 1; c < 20; ++c) {
        BigInt x = 2, y = 2, d = 1;
        auto   f = [&](BigInt const& v) { return (v * v + c) % n; };
        for (int it = 0; it < 200000 && d == 1; ++it) {
          x = f(x);
          y = f(f(y));
          d = gcd(abs(x - y), n);
        }
        if (d != 1 && d != n) {
          return d;
        }
      }
      return std::nullopt;
    }

    inline poly::ModGcd minors_gcd_mod(std::vector<poly::ZPoly> const& minors,
                                       BigInt const&                   R) {
      poly::ModGcd acc{{}, std::nullopt};
      for (auto const& f : minors) {
        acc = poly::gcd_mod(acc.gcd, f, R);
        if (acc.splitter) {
          return acc;
        }
      }
      return acc;
    }

    // A prime factor of n if one can be found.
    inline std::optional<BigInt> some_prime_factor(BigInt n) {
      for (BigInt p = 2; p * p <= n && p < 1000000; ++p) {
        if (n % p == 0) {
          return p;
        }
      }
      while (!is_probable_prime(n)) {
        auto d = pollard_rho(n);
        if (!d) {
          return std::nullopt;
        }
        n = *d;
      }
      return n;
    }

  }  // namespace detail

  inline ModuleVerdict is_trivial_module(ModulePresentation const& m) {
    ModuleVerdict verdict;
    auto const    minors = detail::maximal_minors(m);
    if (minors.empty()) {
      verdict.kind = WitnessKind::rank_deficient;
      return verdict;
    }

    // (2) gcd over Q
    poly::ZPoly g;
    for (auto const& f : minors) {
      g = poly::gcd_rational(g, f);
    }
    if (poly::degree(g) > 0) {
      auto [factor, irreducible] = detail::rational_factor(g);
      verdict.kind               = WitnessKind::rational_factor;
      verdict.factor             = detail::to_laurent(factor).normalized();
      verdict.factor_irreducible = irreducible;
      return verdict;
    }

    // (3) D = sum u_i f_i with u_i in Z[t], from Bezout over Q
    std::vector<poly::QPoly> coeffs(minors.size());
    poly::QPoly              acc = poly::to_rational(minors[0]);
    coeffs[0]                    = {1};
    for (std::size_t i = 1; i < minors.size(); ++i) {
      auto x = poly::xgcd(acc, poly::to_rational(minors[i]));
      for (std::size_t j = 0; j < i; ++j) {
        coeffs[j] = poly::mul(coeffs[j], x.u);
      }
      coeffs[i] = x.v;
      acc       = x.g;
    }
    if (poly::degree(acc) == 0 && acc[0] != 1) {
      for (auto& c : coeffs) {
        c = poly::mul(c, {1 / acc[0]});
      }
    }
    BigInt D = 1;
    for (auto const& c : coeffs) {
      for (auto const& q : c) {
        D = detail::lcm(D, denominator(q));
      }
    }
    {
      poly::ZPoly total;
      for (std::size_t i = 0; i < minors.size(); ++i) {
        poly::ZPoly u;
        for (auto const& q : coeffs[i]) {
          BigRational s = q * D;
          if (denominator(s) != 1) {
            throw invariant_error("Bezout coefficient not cleared");
          }
          u.push_back(numerator(s));
        }
        auto prod = poly::multiply(u, minors[i]);
        if (total.size() < prod.size()) {
          total.resize(prod.size());
        }
        for (std::size_t k = 0; k < prod.size(); ++k) {
          total[k] += prod[k];
        }
      }
      poly::trim(total);
      if (total != poly::ZPoly{D}) {
        throw invariant_error("Bezout certificate does not combine to D");
      }
    }
    verdict.certificate = D;

    // (4) examine every prime dividing D. Small primes are split off by
    // trial division; a remaining cofactor R is handled by running Euclid
    // over Z/R, which either splits R or settles all its primes at once.
    std::vector<BigInt> pending;
    BigInt              rest = D;
    for (BigInt p = 2; p <= 10000 && p <= rest; ++p) {
      if (rest % p == 0) {
        pending.push_back(p);
        while (rest % p == 0) {
          rest /= p;
        }
      }
    }
    if (rest > 1) {
      pending.push_back(rest);
    }
    while (!pending.empty()) {
      BigInt R = pending.back();
      pending.pop_back();
      auto result = detail::minors_gcd_mod(minors, R);
      if (result.splitter) {
        BigInt a = *result.splitter, b = R / *result.splitter;
        BigInt common = gcd(a, b);
        if (common > 1) {
          pending.push_back(common);
          while (a % common == 0) {
            a /= common;
          }
          while (b % common == 0) {
            b /= common;
          }
        }
        for (auto const& part : {a, b}) {
          if (part > 1) {
            pending.push_back(part);
          }
        }
        continue;
      }
      bool prime = detail::is_probable_prime(R);
      (prime ? verdict.primes_checked : verdict.composite_moduli_checked)
          .push_back(R);
      if (poly::degree(result.gcd) != 0) {
        BigInt p = R;
        if (!prime) {
          auto f = detail::some_prime_factor(R);
          if (!f) {
            throw invariant_error("cannot factor modulus " + R.str()
                                  + " to report a witness");
          }
          p      = *f;
          result = detail::minors_gcd_mod(minors, p);
        }
        verdict.kind  = WitnessKind::prime_factor;
        verdict.prime = p;
        // all minors vanish mod p: (p, t - 1) contains them
        verdict.factor = result.gcd.empty()
                             ? LaurentPoly::t(1) - LaurentPoly(1)
                             : detail::to_laurent(result.gcd);
        verdict.factor_irreducible = poly::degree(result.gcd) <= 1;
        return verdict;
      }
    }
    std::sort(verdict.primes_checked.begin(), verdict.primes_checked.end());
    verdict.trivial = true;
    verdict.kind    = WitnessKind::unit_ideal;
    return verdict;
  }

  inline ModulePresentation alexander_rows(int M, int N, int P) {
    return ModulePresentation(2, kernel_relator_rows(M, N, P));
  }

  inline ModuleVerdict perfect_kernel_verdict(int M, int N, int P) {
    return is_trivial_module(alexander_rows(M, N, P));
  }

  inline bool is_perfect_kernel(int M, int N, int P) {
    return perfect_kernel_verdict(M, N, P).trivial;
  }

  // H_1 of the kernel of Art_{MNP} -> Z/n, via the Reidemeister-Schreier
  // presentation of the n-fold cyclic cover.
  inline AbelianGroup h1_finite_cover(int M, int N, int P, int n) {
    return abelianization(finite_cover_presentation(triangle_artin(M, N, P), n))
        .group;
  }

  // Integer matrix of the module tensored with Z[t]/(t^n - 1): every row r
  // contributes the rows t^k r (0 <= k < n), each entry expanded into the
  // coefficients of t^0 .. t^(n-1).
  inline IntMatrix circulant_specialization(ModulePresentation const& m, int n) {
    if (n < 1) {
      throw input_error("specialization degree must be >= 1");
    }
    std::size_t const nn = static_cast<std::size_t>(n);
    IntMatrix out(m.rows.size() * nn, m.generators * nn);
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      for (std::size_t k = 0; k < nn; ++k) {
        for (std::size_t g = 0; g < m.generators; ++g) {
          for (auto const& [e, c] : m.rows[r][g].terms()) {
            int col = detail::floor_mod(e + static_cast<int>(k), n);
            out(r * nn + k, g * nn + static_cast<std::size_t>(col)) += c;
          }
        }
      }
    }
    return out;
  }

}  // namespace artin
