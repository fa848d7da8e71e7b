#include <array>
#include <random>

#include <gtest/gtest.h>

#include "artin/bassserre.hpp"

using namespace artin;

namespace {

  // PSL(2, Z) = Z/3 * Z/2 with u -> [[0,-1],[1,1]] and v -> [[0,-1],[1,0]];
  // an element is trivial iff its matrix is +-I.
  using Mat = std::array<long long, 4>;

  Mat mul(Mat const& p, Mat const& q) {
    return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
            p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
  }

  Mat matrix_of(FreeProductElement const& g) {
    Mat const U = {0, -1, 1, 1}, V = {0, -1, 1, 0};
    Mat       out = {1, 0, 0, 1};
    for (auto const& s : g.syllables()) {
      for (int i = 0; i < s.exponent; ++i) {
        out = mul(out, s.factor == 0 ? U : V);
      }
    }
    return out;
  }

  bool psl_identity(Mat const& m) {
    return m[1] == 0 && m[2] == 0 && m[0] == m[3] && (m[0] == 1 || m[0] == -1);
  }

  FreeProductElement random_element(std::mt19937_64& rng, int j, int len) {
    std::uniform_int_distribution<int> f(0, 1), e(-5, 5);
    FreeProductElement                 g(j);
    for (int i = 0; i < len; ++i) {
      g.append(f(rng), e(rng));
    }
    return g;
  }

  // Weight hom of <x, s | x^(2m+1) = s^2> to Z: x -> 2, s -> 2m+1.
  long long weight(Word const& w, int m) {
    long long out = 0;
    for (auto const& l : w) {
      out += l.sign * (l.sym == Symbol("x") ? 2 : 2 * m + 1);
    }
    return out;
  }

  long long weight(AmalgamElement const& g) {
    long long out = g.central * 2 * (2 * g.m + 1);
    for (int e : g.syllables) {
      out += e == 0 ? 2 * g.m + 1 : 2 * e;
    }
    return out;
  }

  // Image in the quotient by the center, Z/(2m+1) * Z/2.
  FreeProductElement mod_center(AmalgamElement const& g) {
    FreeProductElement out(2 * g.m + 1);
    for (int e : g.syllables) {
      out.append(e == 0 ? 1 : 0, e == 0 ? 1 : e);
    }
    return out;
  }

  FreeProductElement mod_center(Word const& w, int m) {
    FreeProductElement out(2 * m + 1);
    for (auto const& l : w) {
      out.append(l.sym == Symbol("x") ? 0 : 1, l.sign);
    }
    return out;
  }

}  // namespace

TEST(FreeProduct, NormalForms) {
  auto const u = FreeProductElement::u(3), v = FreeProductElement::v(3);
  EXPECT_TRUE((u * u * u).is_identity());
  EXPECT_TRUE((v * v).is_identity());
  EXPECT_EQ(to_string(u * v * u * u), "uvu^2");
  EXPECT_EQ(to_string(u.inverse()), "u^2");
  EXPECT_EQ(to_string((u * v).inverse()), "vu^2");
  EXPECT_THROW(FreeProductElement(1), input_error);
  EXPECT_THROW(FreeProductElement::u(3) * FreeProductElement::u(5), input_error);
}

TEST(FreeProduct, AssociativeForSeveralOrders) {
  std::mt19937_64 rng(8);
  for (int j : {2, 3, 5, 7}) {
    for (int i = 0; i < 200; ++i) {
      auto a = random_element(rng, j, 6), b = random_element(rng, j, 6),
           c = random_element(rng, j, 6);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_TRUE((a * a.inverse()).is_identity());
      for (std::size_t k = 1; k < a.syllables().size(); ++k) {
        EXPECT_NE(a.syllables()[k].factor, a.syllables()[k - 1].factor);
      }
    }
  }
}

TEST(FreeProduct, IdentityMatchesModularGroup) {
  std::mt19937_64 rng(9);
  int             identities = 0;
  for (int i = 0; i < 500; ++i) {
    auto g = random_element(rng, 3, 1 + i % 9);
    EXPECT_EQ(g.is_identity(), psl_identity(matrix_of(g))) << to_string(g);
    identities += g.is_identity();
  }
  EXPECT_GT(identities, 0);
}

TEST(FreeProduct, UVHasInfiniteOrder) {
  auto const uv = FreeProductElement::u(3) * FreeProductElement::v(3);
  auto       p  = uv;
  for (int n = 1; n <= 60; ++n, p = p * uv) {
    EXPECT_FALSE(p.is_identity()) << n;
    EXPECT_FALSE(psl_identity(matrix_of(p))) << n;
  }
}

TEST(TreeAction, StabilizersOfBaseEdge) {
  auto const u = FreeProductElement::u(3), v = FreeProductElement::v(3);
  auto const ou = TreeVertex::of(FreeProductElement(3), 0);
  auto const ov = TreeVertex::of(FreeProductElement(3), 1);
  EXPECT_EQ(ou.moved_by(u), ou);
  EXPECT_NE(ov.moved_by(u), ov);
  EXPECT_EQ(ov.moved_by(v), ov);
  EXPECT_NE(ou.moved_by(v), ou);
  EXPECT_EQ(ou.moved_by(v * u).moved_by(u.inverse() * v), ou);
}

TEST(Epimorphism, RelatorsVanish) {
  for (int k = 1; k <= 5; ++k) {
    auto check = check_hom_to_freeprod(k, epi_images());
    EXPECT_TRUE(check.ok()) << k;
    for (auto const& im : check.relator_images) {
      EXPECT_TRUE(psl_identity(matrix_of(im)));
    }
  }
}

TEST(Epimorphism, CorruptedImageIsCaught) {
  auto const u   = FreeProductElement::u(3);
  auto       bad = check_hom_to_freeprod(1, epi_images(u * u));
  EXPECT_FALSE(bad.ok());
  std::vector<std::string> got;
  for (auto const& im : bad.relator_images) {
    got.push_back(to_string(im));
  }
  EXPECT_EQ(got, (std::vector<std::string>{"1", "1", "vu^2vu"}));
  EXPECT_FALSE(psl_identity(matrix_of(bad.relator_images[2])));
}

TEST(Epimorphism, FixedVertexImages) {
  for (int k = 1; k <= 3; ++k) {
    auto r = fixed_vertex_images(k);
    EXPECT_TRUE(r.ok()) << k;
    ASSERT_EQ(r.images.size(), 5u);
    for (auto const& im : r.images) {
      EXPECT_TRUE(im.is_identity()) << to_string(im);
      EXPECT_TRUE(psl_identity(matrix_of(im)));
    }
  }
}

TEST(Amalgam, NormalFormExamples) {
  EXPECT_EQ(to_string(amalgam_normalize(parse_word("x^4"), 1)), "zx");
  EXPECT_EQ(to_string(amalgam_normalize(parse_word("sx^3s"), 1)), "z^2");
  EXPECT_TRUE(amalgam_normalize(parse_word("ssX^3"), 1).is_identity());
  EXPECT_EQ(to_string(amalgam_normalize(parse_word("X"), 2)), "z^-1x^4");
  EXPECT_THROW(amalgam_normalize(parse_word("y"), 1), input_error);
}

TEST(Amalgam, MatchesQuotientAndWeight) {
  std::mt19937_64                    rng(10);
  std::uniform_int_distribution<int> pick(0, 3), len(0, 14);
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < 300; ++i) {
      std::vector<GenSym> letters;
      for (int n = len(rng); n > 0; --n) {
        int p = pick(rng);
        letters.emplace_back(p % 2 ? "x" : "s", p < 2 ? 1 : -1);
      }
      Word w(std::move(letters));
      auto g = amalgam_normalize(w, m);
      EXPECT_EQ(weight(g), weight(w, m)) << to_string(w);
      EXPECT_EQ(mod_center(g), mod_center(w, m)) << to_string(w);
      auto h = amalgam_normalize(w.inverse(), m);
      EXPECT_TRUE((g * h).is_identity());
    }
  }
}

TEST(Amalgam, DihedralGenerators) {
  for (int m = 1; m <= 3; ++m) {
    auto r = verify_dihedral_generators(m, false);
    EXPECT_TRUE(r.relator_trivial);
    EXPECT_TRUE(r.ab_is_x);
    EXPECT_TRUE(r.s_recovered);
    EXPECT_FALSE(verify_dihedral_generators(m, true).relator_trivial) << m;
  }
}
