#include <gtest/gtest.h>

#include "wordhopf/wordhopf.hpp"

using namespace wordhopf;

namespace {

// Concatenation with the cut coproduct: a bialgebra candidate that fails.
HopfDef<Word> concat_cut_fixture() {
  HopfDef<Word> h = shuffle_def();
  h.name = "concat-cut";
  h.product = [](const Word& a, const Word& b) { return Elem<Word>(concat(a, b)); };
  return h;
}

}  // namespace

TEST(Antipode, LieHopfPrimitives) {
  HopfDef<Word> h = liehopf_def();
  for (Letter n = 1; n <= 5; ++n) EXPECT_EQ(antipode(h, Elem<Word>(Word{n})), Elem<Word>(Word{n}, -1));
}

TEST(Antipode, UnitIsFixed) {
  EXPECT_EQ(antipode(shuffle_def(), Elem<Word>(Word{})), Elem<Word>(Word{}));
  EXPECT_EQ(antipode(mpr_def(), Elem<Perm>(Perm{})), Elem<Perm>(Perm{}));
}

TEST(Antipode, NsymmZ2) {
  EXPECT_EQ(antipode(nsymm_def(), Elem<Word>(Word{2})), (Elem<Word>{{Word{1, 1}, 1}, {Word{2}, -1}}));
}

TEST(Antipode, ShuffleReversesWithSign) {
  // S(w) = (-1)^lg(w) reverse(w) in the shuffle algebra.
  HopfDef<Word> h = shuffle_def();
  for (const auto& w : words_up_to_weight(5)) {
    std::vector<Letter> r(w.letters().rbegin(), w.letters().rend());
    EXPECT_EQ(antipode(h, Elem<Word>(w)), Elem<Word>(Word(r), w.size() % 2 ? -1 : 1)) << key_to_string(w);
  }
}

TEST(CheckBialgebra, ShuffleAndMprPass) {
  EXPECT_TRUE(check_bialgebra(shuffle_def(), 5).passed());
  Report r = check_bialgebra(mpr_def(), 4);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_GT(r.cases, 100u);
}

TEST(CheckBialgebra, NegativeControlFails) {
  Report r = check_bialgebra(concat_cut_fixture(), 3);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.failure->property, "hopf-compatibility");
  EXPECT_EQ(r.failure->input, "x=[1], y=[1]");
}

TEST(CheckBialgebra, BrokenCoproductIsCaught) {
  HopfDef<Perm> h = mpr_def();
  // Drop the middle terms of the coproduct: still counital, no longer
  // compatible with the product.
  h.coproduct = [](const Perm& s) {
    Tensor<Perm> t;
    t.add_term({Perm{}, s}, 1);
    if (!s.empty()) t.add_term({s, Perm{}}, 1);
    return t;
  };
  EXPECT_FALSE(check_bialgebra(h, 3).passed());
}

TEST(CheckAntipode, Passes) {
  EXPECT_TRUE(check_antipode(liehopf_def(), 5).passed());
  EXPECT_TRUE(check_antipode(qsymm_def(), 5).passed());
}

TEST(CheckDualPair, WrongPairingIsCaught) {
  // Shuffle is not self-dual under the Kronecker pairing.
  Report r = check_dual_pair(shuffle_def(), shuffle_def(), kronecker_pairing<Word>(), 3);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(check_dual_pair(liehopf_def(), shuffle_def(), kronecker_pairing<Word>(), 4).passed());
}

TEST(CheckMorphism, IdentityPasses) {
  LinearMap<Perm, Perm> id = [](const Perm& s) { return Elem<Perm>(s); };
  EXPECT_TRUE(check_hopf_morphism(id, mpr_def(), mpr_def(), 4).passed());
}

TEST(CheckMorphism, StIsAlgebraButNotCoalgebraMap) {
  LinearMap<Word, Perm> st = schensted_to_mpr;
  EXPECT_TRUE(check_hopf_morphism(st, wha_def(), mpr_def(), 5, Halves::Algebra, "st").passed());
  Report r = check_hopf_morphism(st, wha_def(), mpr_def(), 5, Halves::Coalgebra, "st");
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.failure->input, "x=[1,1]");
  // mu_WHA([1,1]) has two terms, mu_MPR([1,2]) three.
  EXPECT_EQ(wha_comul(Word{1, 1}).size(), 2u);
  EXPECT_EQ(mpr_comul(Perm(Word{1, 2})).size(), 3u);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_basis(qsymm_def(), 3).size(), 8u);
  EXPECT_EQ(enumerate_basis(mpr_def(), 3).size(), 10u);
  HopfDef<Word> bare;
  bare.name = "bare";
  EXPECT_THROW(enumerate_basis(bare, 2), std::invalid_argument);
}

TEST(Report, TextAndJson) {
  Report r = check_bialgebra(concat_cut_fixture(), 2);
  EXPECT_NE(r.to_text().find("FAIL bialgebra[concat-cut]"), std::string::npos);
  auto j = r.to_json();
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["failure"]["property"], "hopf-compatibility");
}
