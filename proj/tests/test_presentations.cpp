#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "artin/presentations.hpp"

using namespace artin;

namespace {

  // Generators of Art_{MNP} joined by an odd label are conjugate, so H_1 is
  // free abelian on the classes of this relation.
  std::size_t odd_label_classes(int M, int N, int P) {
    std::vector<int> parent = {0, 1, 2};
    auto             find   = [&parent](int x) {
      while (parent[x] != x) {
        x = parent[x];
      }
      return x;
    };
    auto join = [&](int x, int y, int L) {
      if (L % 2 == 1) {
        parent[find(x)] = find(y);
      }
    };
    join(0, 1, M);
    join(1, 2, N);
    join(2, 0, P);
    std::size_t classes = 0;
    for (int i = 0; i < 3; ++i) {
      classes += find(i) == i;
    }
    return classes;
  }

  // Rebuilds the word from the insertion steps without using
  // replay_certificate: the last word must be empty.
  bool insertions_empty_word(Word w, Presentation const& p,
                             std::vector<CertificateStep> const& cert) {
    w = free_reduce(w);
    for (auto const& s : cert) {
      Word r = p.cyclic_relators()[s.relator];
      if (s.exponent < 0) {
        r = r.inverse();
      }
      Word piece = rotate(r, s.rotation);
      std::vector<GenSym> v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s.position));
      v.insert(v.end(), piece.begin(), piece.end());
      v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(s.position), w.end());
      w = free_reduce(Word(std::move(v)));
    }
    return w.empty();
  }

}  // namespace

TEST(Presentation, TriangleRelators) {
  auto p = triangle_artin(2, 3, 7);
  ASSERT_EQ(p.relators().size(), 3u);
  EXPECT_EQ(p.relators()[0], parse_word("abAB"));
  EXPECT_EQ(p.relators()[1], parse_word("bcbCBC"));
  EXPECT_EQ(p.relators()[2], parse_word("cacacacACACACA"));
  EXPECT_THROW(triangle_artin(1, 3, 7), input_error);
}

TEST(Presentation, HanhamRelators) {
  auto p = hanham_presentation(3);
  EXPECT_EQ(p.generators().size(), 6u);
  EXPECT_EQ(p.relators()[5], parse_word("{delta}{alpha}^-1X{alpha}^-1"));
  EXPECT_EQ(hanham_presentation(5).relators()[5].size(), 6u);
  EXPECT_THROW(hanham_presentation(2), input_error);
}

TEST(Presentation, RejectsBadInput) {
  EXPECT_THROW(Presentation(symbols({"a", "a"}), {}), input_error);
  EXPECT_THROW(Presentation(symbols({"a"}), {parse_word("b")}), input_error);
  EXPECT_THROW(Presentation(symbols({"a"}), {parse_word("aA")}), input_error);
}

TEST(Abelianization, TriangleGroups) {
  for (auto [M, N, P] : std::vector<std::tuple<int, int, int>>{
           {2, 3, 7}, {3, 3, 3}, {2, 4, 4}, {2, 2, 2}, {4, 6, 8}, {2, 3, 8}}) {
    auto g = abelianization(triangle_artin(M, N, P)).group;
    EXPECT_TRUE(g.torsion.empty());
    EXPECT_EQ(g.free_rank, odd_label_classes(M, N, P)) << M << N << P;
  }
  EXPECT_EQ(abelianization(triangle_artin(2, 4, 4)).group.describe(), "Z^3");
}

TEST(Permutation, CyclesActOnTheRight) {
  auto p = Permutation::from_cycles("(1 2)", 3);
  auto q = Permutation::from_cycles("(2 3)", 3);
  // 1 -p-> 2 -q-> 3
  EXPECT_EQ((p * q)[0], 2u);
  EXPECT_TRUE((p * p).is_identity());
  EXPECT_EQ((p * q).inverse(), q * p);
  EXPECT_THROW(Permutation::from_cycles("(1 1)", 3), input_error);
  EXPECT_THROW(Permutation::from_cycles("(1 4)", 3), input_error);
  EXPECT_THROW(Permutation({0, 0}), input_error);
}

TEST(BoundedSearch, FindsCommutatorConsequences) {
  Presentation z2(symbols({"a", "b"}), {parse_word("abAB")});
  for (auto text : {"abAB", "baBA", "aabAAB", "abABbaBA", "AbaB"}) {
    Word w = parse_word(text);
    auto v = bounded_trivial(w, z2);
    ASSERT_EQ(v.status, Triviality::trivial) << text;
    EXPECT_TRUE(replay_certificate(w, z2, v.certificate));
    EXPECT_TRUE(insertions_empty_word(w, z2, v.certificate));
  }
}

TEST(BoundedSearch, NeverClaimsNontrivial) {
  Presentation z2(symbols({"a", "b"}), {parse_word("abAB")});
  auto         v = bounded_trivial(parse_word("a"), z2, {4, 16, 2000});
  EXPECT_EQ(v.status, Triviality::unknown);
  EXPECT_TRUE(v.certificate.empty());
}

TEST(BoundedSearch, BrokenCertificateIsRejected) {
  Presentation z2(symbols({"a", "b"}), {parse_word("abAB")});
  Word         w = parse_word("abAB");
  auto         v = bounded_trivial(w, z2);
  ASSERT_FALSE(v.certificate.empty());
  auto bad = v.certificate;
  bad.front().exponent = -bad.front().exponent;
  EXPECT_FALSE(replay_certificate(w, z2, bad));
}

TEST(CheckHom, PermutationTargets) {
  PermutationImages ok{3, {}};
  for (auto g : {"a", "b", "c"}) {
    ok.images[Symbol(g)] = Permutation::from_cycles("(1 2)", 3);
  }
  for (auto const& rc : check_hom(GroupHom{triangle_artin(2, 3, 7), ok})) {
    EXPECT_EQ(rc.verdict.status, Triviality::trivial);
  }
  PermutationImages bad = ok;
  bad.images[Symbol("b")] = Permutation::from_cycles("(2 3)", 3);
  auto checks             = check_hom(GroupHom{triangle_artin(2, 3, 7), bad});
  EXPECT_EQ(checks[0].verdict.status, Triviality::nontrivial);
}

TEST(CheckHom, DegreeMapToZ) {
  WordImages t{infinite_cyclic(), {}};
  for (auto g : {"a", "b", "c"}) {
    t.images[Symbol(g)] = parse_word("t");
  }
  for (auto const& rc : check_hom(GroupHom{triangle_artin(4, 3, 5), t})) {
    EXPECT_EQ(rc.verdict.status, Triviality::trivial);
  }
  WordImages u{infinite_cyclic(), {{Symbol("a"), parse_word("tt")}}};
  Presentation cyclic3(symbols({"a"}), {parse_word("aaa")});
  auto         checks = check_hom(GroupHom{cyclic3, u});
  EXPECT_EQ(checks[0].verdict.status, Triviality::nontrivial);
  EXPECT_EQ(checks[0].image, parse_word("t^6"));
}

TEST(CheckHom, MissingImageIsInputError) {
  WordImages t{infinite_cyclic(), {}};
  t.images[Symbol("a")] = parse_word("t");
  EXPECT_THROW(check_hom(GroupHom{triangle_artin(2, 3, 7), t}), input_error);
}

class HanhamMaps : public ::testing::TestWithParam<int> {};

TEST_P(HanhamMaps, PhiAndPsiRespectRelators) {
  int const m = GetParam();
  for (auto const& h : {hanham_phi(m), hanham_psi(m)}) {
    auto const& target = std::get<WordImages>(h.target).target;
    for (auto const& rc : check_hom(h)) {
      ASSERT_EQ(rc.verdict.status, Triviality::trivial) << to_string(rc.relator);
      EXPECT_TRUE(insertions_empty_word(rc.image, target, rc.verdict.certificate));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallM, HanhamMaps, ::testing::Values(3, 4, 5));
