#pragma once

// Integer Laurent polynomials in one variable t, plus the dense polynomial
// algorithms (over Z, Q and Z/R) used by the module decision procedure.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "artin/error.hpp"
#include "artin/intlinalg.hpp"

namespace artin {

  using BigRational = boost::multiprecision::cpp_rational;

  class LaurentPoly {
   public:
    LaurentPoly() = default;
    LaurentPoly(BigInt c) {  // NOLINT: constants convert implicitly
      if (c != 0) {
        coeffs_.emplace(0, std::move(c));
      }
    }
    LaurentPoly(int c) : LaurentPoly(BigInt(c)) {}

    static LaurentPoly monomial(BigInt c, int exponent) {
      LaurentPoly p;
      if (c != 0) {
        p.coeffs_.emplace(exponent, std::move(c));
      }
      return p;
    }
    static LaurentPoly t(int exponent = 1) {
      return monomial(1, exponent);
    }
    // sum_{i >= 0} coeffs[i] t^i
    static LaurentPoly from_dense(std::vector<BigInt> const& coeffs) {
      LaurentPoly p;
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        p.add_term(static_cast<int>(i), coeffs[i]);
      }
      return p;
    }

    bool is_zero() const noexcept {
      return coeffs_.empty();
    }
    std::map<int, BigInt> const& terms() const noexcept {
      return coeffs_;
    }
    int low_degree() const {
      require_nonzero();
      return coeffs_.begin()->first;
    }
    int high_degree() const {
      require_nonzero();
      return coeffs_.rbegin()->first;
    }
    BigInt coefficient(int exponent) const {
      auto it = coeffs_.find(exponent);
      return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    void add_term(int exponent, BigInt const& c) {
      if (c == 0) {
        return;
      }
      auto [it, inserted] = coeffs_.try_emplace(exponent, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          coeffs_.erase(it);
        }
      }
    }

    LaurentPoly shifted(int k) const {
      LaurentPoly out;
      for (auto const& [e, c] : coeffs_) {
        out.coeffs_.emplace(e + k, c);
      }
      return out;
    }

    // +-t^k * p with lowest degree 0 and positive lowest coefficient.
    LaurentPoly normalized() const {
      if (is_zero()) {
        return *this;
      }
      LaurentPoly out = shifted(-low_degree());
      if (out.coeffs_.begin()->second < 0) {
        out = -out;
      }
      return out;
    }

    BigInt evaluate(BigInt const& x) const {
      // valid for integer x only when no negative exponents remain or x = +-1
      BigInt total = 0;
      for (auto const& [e, c] : coeffs_) {
        if (e < 0 && abs(x) != 1) {
          throw input_error("cannot evaluate negative powers at " + x.str());
        }
        BigInt term = c;
        int    k    = e < 0 ? -e : e;
        for (int i = 0; i < k; ++i) {
          term *= x;
        }
        total += term;
      }
      return total;
    }

    // Coefficients of t^low .. t^high after shifting so low = 0.
    std::vector<BigInt> dense_after_shift() const {
      if (is_zero()) {
        return {};
      }
      std::vector<BigInt> out(
          static_cast<std::size_t>(high_degree() - low_degree() + 1));
      for (auto const& [e, c] : coeffs_) {
        out[static_cast<std::size_t>(e - low_degree())] = c;
      }
      return out;
    }

    LaurentPoly operator-() const {
      LaurentPoly out;
      for (auto const& [e, c] : coeffs_) {
        out.coeffs_.emplace(e, -c);
      }
      return out;
    }
    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) {
      for (auto const& [e, c] : b.coeffs_) {
        a.add_term(e, c);
      }
      return a;
    }
    friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) {
      for (auto const& [e, c] : b.coeffs_) {
        a.add_term(e, -c);
      }
      return a;
    }
    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
      LaurentPoly out;
      for (auto const& [e1, c1] : a.coeffs_) {
        for (auto const& [e2, c2] : b.coeffs_) {
          out.add_term(e1 + e2, c1 * c2);
        }
      }
      return out;
    }
    LaurentPoly& operator+=(LaurentPoly const& b) {
      return *this = *this + b;
    }
    LaurentPoly& operator-=(LaurentPoly const& b) {
      return *this = *this - b;
    }

    friend bool operator==(LaurentPoly const&, LaurentPoly const&) = default;
    friend bool operator<(LaurentPoly const& a, LaurentPoly const& b) {
      return a.coeffs_ < b.coeffs_;
    }

   private:
    void require_nonzero() const {
      if (coeffs_.empty()) {
        throw input_error("degree of the zero polynomial");
      }
    }

    std::map<int, BigInt> coeffs_;
  };

  // "1-t+t^2", "-t^-1+3", "0"
  inline std::string to_string(LaurentPoly const& p) {
    if (p.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [e, c] : p.terms()) {
      BigInt mag   = abs(c);
      bool   first = out.empty();
      if (c < 0) {
        out += "-";
      } else if (!first) {
        out += "+";
      }
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) {
        out += mag.str() + "*";
      }
      out += "t";
      if (e != 1) {
        out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  // c_L(t) = sum_{i=0}^{L-1} (-t)^i
  inline LaurentPoly alternating_sum(int length) {
    LaurentPoly p;
    for (int i = 0; i < length; ++i) {
      p.add_term(i, i % 2 == 0 ? 1 : -1);
    }
    return p;
  }

  using LaurentVector = std::vector<LaurentPoly>;

  // Multiplies by +-t^k so the lowest exponent over all entries is 0 and the
  // first entry attaining it has a positive coefficient.
  inline LaurentVector normalize(LaurentVector v) {
    std::optional<int> low;
    for (auto const& p : v) {
      if (!p.is_zero()) {
        low = low ? std::min(*low, p.low_degree()) : p.low_degree();
      }
    }
    if (!low) {
      return v;
    }
    int sign = 1;
    for (auto const& p : v) {
      if (!p.is_zero() && p.low_degree() == *low) {
        sign = p.coefficient(*low) < 0 ? -1 : 1;
        break;
      }
    }
    for (auto& p : v) {
      p = p.shifted(-*low);
      if (sign < 0) {
        p = -p;
      }
    }
    return v;
  }

  // -------------------------------------------------------------------
  // Dense polynomials: index i holds the coefficient of t^i, no trailing
  // zeros; the zero polynomial is empty.
  // -------------------------------------------------------------------
  namespace poly {

    using ZPoly = std::vector<BigInt>;
    using QPoly = std::vector<BigRational>;

    template <typename P>
    void trim(P& p) {
      while (!p.empty() && p.back() == 0) {
        p.pop_back();
      }
    }

    template <typename P>
    int degree(P const& p) {
      return static_cast<int>(p.size()) - 1;  // -1 for zero
    }

    inline BigInt content(ZPoly const& p) {
      BigInt g = 0;
      for (auto const& c : p) {
        g = gcd(g, c);
      }
      return g;
    }

    // Primitive part with positive leading coefficient.
    inline ZPoly primitive_part(ZPoly p) {
      trim(p);
      if (p.empty()) {
        return p;
      }
      BigInt g = content(p);
      if (p.back() < 0) {
        g = -g;
      }
      for (auto& c : p) {
        c /= g;
      }
      return p;
    }

    inline ZPoly multiply(ZPoly const& a, ZPoly const& b) {
      if (a.empty() || b.empty()) {
        return {};
      }
      ZPoly out(a.size() + b.size() - 1);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          out[i + j] += a[i] * b[j];
        }
      }
      trim(out);
      return out;
    }

    // Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
    inline ZPoly pseudo_remainder(ZPoly a, ZPoly const& b) {
      int db = degree(b);
      while (degree(a) >= db && !a.empty()) {
        int    shift = degree(a) - db;
        BigInt la    = a.back();
        for (auto& c : a) {
          c *= b.back();
        }
        for (int i = 0; i <= db; ++i) {
          a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
        }
        trim(a);
      }
      return a;
    }

    // gcd over Q, returned as a primitive integer polynomial with positive
    // leading coefficient (primitive remainder sequence).
    inline ZPoly gcd_rational(ZPoly a, ZPoly b) {
      a = primitive_part(std::move(a));
      b = primitive_part(std::move(b));
      while (!b.empty()) {
        ZPoly r = primitive_part(pseudo_remainder(a, b));
        a       = std::move(b);
        b       = std::move(r);
      }
      return a;
    }

    // Exact division over Z; nullopt when b does not divide a in Z[t].
    inline std::optional<ZPoly> divide_exact(ZPoly a, ZPoly const& b) {
      if (b.empty()) {
        throw input_error("division by the zero polynomial");
      }
      trim(a);
      if (a.empty()) {
        return ZPoly{};
      }
      if (degree(a) < degree(b)) {
        return std::nullopt;
      }
      ZPoly q(static_cast<std::size_t>(degree(a) - degree(b) + 1));
      while (!a.empty() && degree(a) >= degree(b)) {
        if (a.back() % b.back() != 0) {
          return std::nullopt;
        }
        BigInt      c     = a.back() / b.back();
        std::size_t shift = static_cast<std::size_t>(degree(a) - degree(b));
        q[shift]          = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
          a[i + shift] -= c * b[i];
        }
        trim(a);
      }
      if (!a.empty()) {
        return std::nullopt;
      }
      return q;
    }

    // Phi_k(t)
    inline ZPoly cyclotomic(int k) {
      thread_local std::map<int, ZPoly> cache;
      if (auto it = cache.find(k); it != cache.end()) {
        return it->second;
      }
      ZPoly p(static_cast<std::size_t>(k) + 1);
      p[0] = -1;
      p[static_cast<std::size_t>(k)] = 1;
      for (int d = 1; d < k; ++d) {
        if (k % d == 0) {
          p = *divide_exact(p, cyclotomic(d));
        }
      }
      cache.emplace(k, p);
      return p;
    }

    // ----- rational arithmetic, for Bezout coefficients -----

    inline QPoly to_rational(ZPoly const& p) {
      return QPoly(p.begin(), p.end());
    }

    inline QPoly sub(QPoly a, QPoly const& b) {
      if (a.size() < b.size()) {
        a.resize(b.size());
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
      }
      trim(a);
      return a;
    }
    inline QPoly add(QPoly a, QPoly const& b) {
      if (a.size() < b.size()) {
        a.resize(b.size());
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += b[i];
      }
      trim(a);
      return a;
    }
    inline QPoly mul(QPoly const& a, QPoly const& b) {
      if (a.empty() || b.empty()) {
        return {};
      }
      QPoly out(a.size() + b.size() - 1);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          out[i + j] += a[i] * b[j];
        }
      }
      trim(out);
      return out;
    }
    inline std::pair<QPoly, QPoly> divmod(QPoly a, QPoly const& b) {
      QPoly q;
      if (degree(a) >= degree(b)) {
        q.resize(static_cast<std::size_t>(degree(a) - degree(b) + 1));
      }
      while (!a.empty() && degree(a) >= degree(b)) {
        BigRational c     = a.back() / b.back();
        std::size_t shift = static_cast<std::size_t>(degree(a) - degree(b));
        q[shift]          = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
          a[i + shift] -= c * b[i];
        }
        a.pop_back();  // leading term cancels exactly
        trim(a);
      }
      trim(q);
      return {q, a};
    }

    // g = u a + v b with g monic (or zero).
    struct QXgcd {
      QPoly g, u, v;
    };
    inline QXgcd xgcd(QPoly const& a, QPoly const& b) {
      QPoly r0 = a, r1 = b;
      QPoly s0{1}, s1{}, t0{}, t1{1};
      while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2    = sub(s0, mul(q, s1));
        QPoly t2    = sub(t0, mul(q, t1));
        r0          = std::move(r1);
        r1          = std::move(r);
        s0          = std::move(s1);
        s1          = std::move(s2);
        t0          = std::move(t1);
        t1          = std::move(t2);
      }
      if (!r0.empty()) {
        BigRational lc = r0.back();
        for (auto* p : {&r0, &s0, &t0}) {
          for (auto& c : *p) {
            c /= lc;
          }
        }
      }
      return {r0, s0, t0};
    }

    // ----- arithmetic modulo an integer R (a field when R is prime) -----

    inline BigInt mod(BigInt const& x, BigInt const& R) {
      BigInt r = x % R;
      return r < 0 ? r + R : r;
    }

    // Extended Euclid in Z; returns (g, s) with s*a = g (mod R).
    inline std::pair<BigInt, BigInt> inverse_or_gcd(BigInt a, BigInt const& R) {
      BigInt r0 = mod(a, R), r1 = R, s0 = 1, s1 = 0;
      while (r1 != 0) {
        BigInt q  = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0        = r1;
        r1        = r2;
        s0        = s1;
        s1        = s2;
      }
      return {r0, mod(s0, R)};
    }

    inline ZPoly reduce_mod(ZPoly p, BigInt const& R) {
      for (auto& c : p) {
        c = mod(c, R);
      }
      trim(p);
      return p;
    }

    // Outcome of Euclid's algorithm over Z/R. When a leading coefficient is
    // not invertible, `splitter` holds a nontrivial divisor of R.
    struct ModGcd {
      ZPoly                 gcd;  // monic, or empty for zero
      std::optional<BigInt> splitter;
    };

    inline ModGcd gcd_mod(ZPoly a, ZPoly b, BigInt const& R) {
      a = reduce_mod(std::move(a), R);
      b = reduce_mod(std::move(b), R);
      auto make_monic = [&R](ZPoly& p) -> std::optional<BigInt> {
        if (p.empty()) {
          return std::nullopt;
        }
        auto [g, inv] = inverse_or_gcd(p.back(), R);
        if (g != 1) {
          return g;
        }
        for (auto& c : p) {
          c = mod(c * inv, R);
        }
        return std::nullopt;
      };
      if (auto s = make_monic(a)) {
        return {{}, s};
      }
      if (auto s = make_monic(b)) {
        return {{}, s};
      }
      while (!b.empty()) {
        // a mod b with b monic
        while (!a.empty() && degree(a) >= degree(b)) {
          BigInt      c     = a.back();
          std::size_t shift = static_cast<std::size_t>(degree(a) - degree(b));
          for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] = mod(a[i + shift] - c * b[i], R);
          }
          trim(a);
        }
        if (auto s = make_monic(a)) {
          return {{}, s};
        }
        std::swap(a, b);
      }
      return {a, std::nullopt};
    }

  }  // namespace poly

}  // namespace artin
