#include <random>

#include <gtest/gtest.h>

#include "artin/rs.hpp"

using namespace artin;

namespace {

  Word random_kernel_word(std::mt19937_64& rng, std::size_t max_len) {
    static char const* names[] = {"a", "b", "c"};
    std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, 2);
    std::uniform_int_distribution<int>         sign(0, 1);
    while (true) {
      std::vector<GenSym> out;
      for (std::size_t i = len(rng); i > 0; --i) {
        out.emplace_back(names[pick(rng)], sign(rng) ? 1 : -1);
      }
      Word w(std::move(out));
      if (degree(w) == 0) {
        return w;
      }
    }
  }

  RewrittenWord letters(std::vector<std::tuple<int, char const*, int>> parts) {
    RewrittenWord out;
    for (auto [shift, g, sign] : parts) {
      out.push_back({{shift, Symbol(g)}, sign});
    }
    return out;
  }

  // (c_M, 0), (c_N, -c_N), (0, c_P) with c_L = sum (-t)^i.
  std::vector<LaurentVector> closed_form_rows(int M, int N, int P) {
    auto c = [](int L) { return alternating_sum(L); };
    return {normalize({c(M), LaurentPoly()}), normalize({c(N), -c(N)}),
            normalize({LaurentPoly(), c(P)})};
  }

}  // namespace

TEST(Rewrite, CommutatorGroundTruth) {
  auto r = rewrite_tau(parse_word("abAB"), InfiniteShift{});
  EXPECT_EQ(r, letters({{1, "b", 1}, {0, "b", -1}}));
  EXPECT_EQ(to_string(r), "s_{1,b} s_{0,b}^-1");
}

TEST(Rewrite, BraidRelatorByPrefixRule) {
  auto r = rewrite_tau(parse_word("bcbCBC"), InfiniteShift{});
  EXPECT_EQ(r, letters({{0, "b", 1}, {1, "c", 1}, {2, "b", 1},
                        {2, "c", -1}, {1, "b", -1}, {0, "c", -1}}));
}

TEST(Rewrite, EmptyAndPreconditions) {
  EXPECT_TRUE(rewrite_tau(Word{}, InfiniteShift{}).empty());
  EXPECT_THROW(rewrite_tau(parse_word("ab"), InfiniteShift{}), input_error);
  EXPECT_THROW(rewrite_tau(parse_word("a"), Modulo{3}), input_error);
  EXPECT_NO_THROW(rewrite_tau(parse_word("aaa"), Modulo{3}));
}

TEST(Rewrite, ModularKeepsOnlyTheWrapSymbol) {
  auto r = rewrite_tau(parse_word("aaa"), Modulo{3});
  EXPECT_EQ(r, letters({{2, "a", 1}}));
  auto s = rewrite_tau(parse_word("Ab"), Modulo{2});
  // A at prefix 0 -> shift -1 = 1 mod 2 = n-1, survives
  EXPECT_EQ(s, letters({{1, "a", -1}, {1, "b", 1}}));
}

TEST(Rewrite, ShiftEquivariance) {
  std::mt19937_64 rng(3);
  Word const      a = letter("a");
  for (int i = 0; i < 500; ++i) {
    Word w       = random_kernel_word(rng, 12);
    auto base    = rewrite_tau(w, InfiniteShift{});
    auto shifted = rewrite_tau(a * w * a.inverse(), InfiniteShift{});
    for (auto& l : base) {
      ++l.gen.shift;
    }
    EXPECT_EQ(shifted, base) << to_string(w);
  }
}

TEST(Rewrite, ExpansionRecoversTheWord) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    Word w = random_kernel_word(rng, 14);
    EXPECT_EQ(expand(rewrite_tau(w, InfiniteShift{}), InfiniteShift{}), free_reduce(w));
    for (int n : {1, 2, 3, 5}) {
      Word v = w * letter("a").pow(n);  // degree n, lies in the mod-n kernel
      EXPECT_EQ(expand(rewrite_tau(v, Modulo{n}), Modulo{n}), free_reduce(v));
    }
  }
}

TEST(KernelRows, TwoThreeSeven) {
  auto rows = kernel_relator_rows(2, 3, 7);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(to_string(rows[0][0]), "1-t");
  EXPECT_TRUE(rows[0][1].is_zero());
  EXPECT_EQ(to_string(rows[1][0]), "1-t+t^2");
  EXPECT_EQ(rows[1][1], -rows[1][0]);
  EXPECT_EQ(to_string(rows[2][1]), "1-t+t^2-t^3+t^4-t^5+t^6");
}

TEST(KernelRows, MatchClosedFormsOnGrid) {
  for (int M = 2; M <= 12; ++M) {
    for (int N = 2; N <= 12; ++N) {
      for (int P = 2; P <= 12; ++P) {
        EXPECT_EQ(kernel_relator_rows(M, N, P), closed_form_rows(M, N, P))
            << M << "," << N << "," << P;
      }
    }
  }
}

TEST(Cover, Counts) {
  auto p = finite_cover_presentation(triangle_artin(2, 3, 7), 2);
  EXPECT_EQ(p.generators().size(), 5u);
  EXPECT_EQ(p.relators().size(), 6u);
  auto q = finite_cover_presentation(triangle_artin(2, 3, 6), 6);
  EXPECT_EQ(q.generators().size(), 13u);
  EXPECT_EQ(q.relators().size(), 18u);
}

TEST(Cover, IndexOneKeepsAbelianization) {
  for (auto [M, N, P] : std::vector<std::tuple<int, int, int>>{{2, 3, 7}, {2, 4, 4}, {3, 3, 3}}) {
    Presentation p = triangle_artin(M, N, P);
    EXPECT_EQ(abelianization(finite_cover_presentation(p, 1)).group,
              abelianization(p).group);
  }
}

TEST(Cover, RelatorsExpandToConjugatesOfRelators) {
  Presentation const p = triangle_artin(2, 3, 5);
  int const          n = 3;
  auto const         cover = finite_cover_presentation(p, n);
  Word const         a     = letter("a");
  std::size_t        k     = 0;
  for (int i = 0; i < n; ++i) {
    for (auto const& r : p.relators()) {
      RewrittenWord rw;
      for (auto const& g : cover.relators()[k++]) {
        // s_I_G
        auto const& name = g.name();
        auto        cut  = name.rfind('_');
        rw.push_back({{std::stoi(name.substr(2, cut - 2)), Symbol(name.substr(cut + 1))},
                      g.sign});
      }
      EXPECT_EQ(expand(rw, Modulo{n}), free_reduce(a.pow(i) * r * a.pow(-i)));
    }
  }
}
