#include <gtest/gtest.h>

#include "wordhopf/wordhopf.hpp"

using namespace wordhopf;

TEST(Shuffle, ProductAndCoproduct) {
  HopfDef<Word> h = shuffle_def();
  EXPECT_EQ(h.product(Word{1}, Word{1, 2}), (Elem<Word>{{Word{1, 1, 2}, 2}, {Word{1, 2, 1}, 1}}));
  EXPECT_EQ(h.coproduct(Word{4, 7}),
            (Tensor<Word>{{{Word{}, Word{4, 7}}, 1}, {{Word{4}, Word{7}}, 1}, {{Word{4, 7}, Word{}}, 1}}));
}

TEST(LieHopf, CoproductOfU113) {
  Tensor<Word> mu = liehopf_def().coproduct(Word{1, 1, 3});
  EXPECT_EQ(mu.size(), 6u);
  EXPECT_EQ(mu.coeff({Word{1}, Word{1, 3}}), 2);
  EXPECT_EQ(mu.coeff({Word{1, 3}, Word{1}}), 2);
  EXPECT_EQ(mu.coeff({Word{3}, Word{1, 1}}), 1);
  EXPECT_EQ(mu.coeff({Word{1, 1}, Word{3}}), 1);
}

TEST(LieHopf, HopfAndDualToShuffle) {
  EXPECT_TRUE(check_bialgebra(liehopf_def(), 5).passed());
  EXPECT_TRUE(check_dual_pair(liehopf_def(), shuffle_def(), kronecker_pairing<Word>(), 5).passed());
}

TEST(PermAction, Examples) {
  Word a{11, 12, 13, 14, 15};
  EXPECT_EQ(perm_action(Perm(Word{3, 1, 4, 5, 2}), a), Elem<Word>(Word{13, 11, 14, 15, 12}));
  EXPECT_EQ(perm_action(Perm{}, Word{}), Elem<Word>(Word{}));
  EXPECT_TRUE(perm_action(Perm(Word{2, 1}), Word{1, 2, 3}).empty());
}

TEST(Convolution, OneStep) {
  GradedEndo f = perm_endo(Elem<Perm>(Perm(Word{1})), 2, 2);
  GradedEndo c = convolution(f, f);
  EXPECT_EQ(c(Word{1, 2}), (Elem<Word>{{Word{1, 2}, 1}, {Word{2, 1}, 1}}));
}

TEST(Convolution, UnitEndo) {
  GradedEndo e = unit_endo(3, 2);
  GradedEndo f = perm_endo(Elem<Perm>{{Perm(Word{2, 1}), 1}, {Perm(Word{1, 2, 3}), -2}}, 3, 2);
  GradedEndo l = convolution(e, f), r = convolution(f, e);
  for (const auto& w : words_bounded(3, 2)) {
    EXPECT_EQ(l(w), f(w));
    EXPECT_EQ(r(w), f(w));
  }
}

TEST(Convolution, OutsideTableThrows) {
  GradedEndo e = unit_endo(1, 1);
  EXPECT_THROW(e(Word{2}), std::out_of_range);
}

TEST(Convolution, MatchesMprProduct) {
  Report r = check_convolution_identity(4, 3);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Coconvolution, WorkedExample) {
  EXPECT_EQ(coconv_component(Perm(Word{3, 1, 4, 5, 2}), 2, 3), Tensor<Perm>({Perm(Word{2, 1}), Perm(Word{2, 3, 1})}));
  Perm s(Word{2, 3, 1});
  EXPECT_EQ(coconv_component(s, 3, 0), Tensor<Perm>({s, Perm{}}));
  EXPECT_THROW(coconv_component(s, 1, 1), std::invalid_argument);
  EXPECT_TRUE(check_coconvolution(5).passed());
}

TEST(Homogeneity, SubstitutionActionCommutesWithLetterMaps) {
  std::vector<Subst> subs;
  for (const auto& p : enumerate_subst(3, 3))
    if (!p.empty()) subs.push_back(p);
  Report r = check_homogeneity(subs, 3);
  EXPECT_TRUE(r.passed()) << r.to_text();
}
