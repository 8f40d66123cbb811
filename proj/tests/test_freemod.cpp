#include <gtest/gtest.h>

#include <limits>

#include "wordhopf/freemod.hpp"
#include "wordhopf/word.hpp"

using namespace wordhopf;

TEST(LinComb, AdditiveInverseIsEmpty) {
  Elem<Word> a(Word{1}, 1), b(Word{1}, -1);
  EXPECT_TRUE((a + b).empty());
}

TEST(LinComb, DisjointSupportsKeepBothTerms) {
  Elem<Word> s = Elem<Word>(Word{1}, 2) + Elem<Word>(Word{2}, 3);
  EXPECT_EQ(s, (Elem<Word>{{Word{1}, 2}, {Word{2}, 3}}));
}

TEST(LinComb, LikeTermsCombine) {
  Elem<Word> s = Elem<Word>(Word{1, 2}) + Elem<Word>(Word{1, 2});
  EXPECT_EQ(s.coeff(Word{1, 2}), 2);
  EXPECT_EQ(s.size(), 1u);
}

TEST(LinComb, NoZeroCoefficientsStored) {
  Elem<Word> s;
  s.add_term(Word{3}, 0);
  EXPECT_TRUE(s.empty());
  s.add_term(Word{3}, 4).add_term(Word{3}, -4);
  EXPECT_TRUE(s.empty());
}

TEST(LinComb, Scale) {
  Elem<Word> a(Word{3}, 7);
  EXPECT_TRUE(scale(0, a).empty());
  EXPECT_EQ(scale(1, a), a);
  EXPECT_EQ(scale(-2, Elem<Word>(Word{1}, 3)), Elem<Word>(Word{1}, -6));
}

TEST(LinComb, BilinearExtension) {
  auto cat = [](const Word& x, const Word& y) { return Elem<Word>(concat(x, y)); };
  EXPECT_EQ(bilinear_extend(cat, Elem<Word>(Word{1}, 2), Elem<Word>(Word{2}, 3)), Elem<Word>(Word{1, 2}, 6));
  EXPECT_TRUE(bilinear_extend(cat, Elem<Word>{}, Elem<Word>(Word{2})).empty());
  auto sh = [](const Word& x, const Word& y) { return shuffle(x, y); };
  EXPECT_EQ(bilinear_extend(sh, Elem<Word>(Word{1}), Elem<Word>(Word{1, 2})),
            (Elem<Word>{{Word{1, 1, 2}, 2}, {Word{1, 2, 1}, 1}}));
}

TEST(LinComb, IterationOrderIsLengthThenLex) {
  Elem<Word> s{{Word{2}, 1}, {Word{1, 1}, 1}, {Word{}, 1}, {Word{1}, 1}};
  std::vector<Word> order;
  for (const auto& [k, c] : s) order.push_back(k);
  EXPECT_EQ(order, (std::vector<Word>{Word{}, Word{1}, Word{2}, Word{1, 1}}));
}

TEST(LinComb, OverflowIsAnError) {
  const Coeff big = std::numeric_limits<Coeff>::max();
  Elem<Word> a(Word{1}, big);
  EXPECT_THROW(a.add_term(Word{1}, 1), OverflowError);
  EXPECT_THROW(scale(2, a), OverflowError);
  EXPECT_THROW(checked_mul(big, 2), OverflowError);
}

TEST(LinComb, TensorAndTensorMap) {
  Tensor<Word> t = tensor(Elem<Word>(Word{1}, 2), Elem<Word>{{Word{2}, 1}, {Word{3}, -1}});
  EXPECT_EQ(t.coeff({Word{1}, Word{2}}), 2);
  EXPECT_EQ(t.coeff({Word{1}, Word{3}}), -2);
  auto dbl = [](const Word& w) { return Elem<Word>(concat(w, w)); };
  Tensor<Word> u = tensor_map<Word, Word>(dbl, dbl, t);
  EXPECT_EQ(u.coeff({Word{1, 1}, Word{2, 2}}), 2);
}
