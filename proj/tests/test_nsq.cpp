#include <gtest/gtest.h>

#include "wordhopf/wordhopf.hpp"

using namespace wordhopf;

namespace {
NsymmElem N(NBasis b, std::initializer_list<std::pair<Word, Coeff>> t) { return {b, Elem<Word>(t)}; }
}  // namespace

TEST(Nsymm, Coproduct) {
  EXPECT_EQ(nsymm_comul(Word{2}),
            (Tensor<Word>{{{Word{}, Word{2}}, 1}, {{Word{1}, Word{1}}, 1}, {{Word{2}, Word{}}, 1}}));
  Tensor<Word> m11 = nsymm_comul(Word{1, 1});
  EXPECT_EQ(m11.size(), 3u);
  EXPECT_EQ(m11.coeff({Word{1}, Word{1}}), 2);
  EXPECT_EQ(nsymm_def().product(Word{1}, Word{2}), Elem<Word>(Word{1, 2}));
}

TEST(Nsymm, WronskiRelations) {
  EXPECT_EQ(z_to_s(Word{1}), Elem<Word>(Word{1}));
  // S_2 = Z_[1,1] - Z_[2]
  EXPECT_EQ(s_to_z(Word{2}), (Elem<Word>{{Word{1, 1}, 1}, {Word{2}, -1}}));
  for (const auto& a : words_up_to_weight(5)) EXPECT_EQ(linear_extend(z_to_s, s_to_z(a)), Elem<Word>(a));
  // sum_{i+j=n} (-1)^i Z_i S_j = 0 for n >= 1
  for (Letter n = 1; n <= 5; ++n) {
    NsymmElem total{NBasis::Z, {}};
    for (Letter i = 0; i <= n; ++i) {
      Word zi = i ? Word{i} : Word{};
      Word sj = n - i ? Word{n - i} : Word{};
      NsymmElem t = nsymm_mul(nsymm(NBasis::Z, zi), nsymm(NBasis::S, sj));
      total = total + NsymmElem{t.basis, (i % 2 ? -1 : 1) * t.terms};
    }
    EXPECT_TRUE(total.terms.empty()) << n;
  }
}

TEST(Nsymm, Ribbons) {
  EXPECT_EQ(r_to_s(Word{3}), Elem<Word>(Word{3}));
  EXPECT_EQ(r_to_s(Word{1, 1}), (Elem<Word>{{Word{1, 1}, 1}, {Word{2}, -1}}));
  for (const auto& a : words_up_to_weight(5)) EXPECT_EQ(linear_extend(s_to_r, r_to_s(a)), Elem<Word>(a));
}

TEST(Nsymm, RibbonProductRule) {
  for (const auto& a : words_up_to_weight(5))
    for (const auto& b : words_up_to_weight(5 - static_cast<int>(weight(a)))) {
      NsymmElem lhs = nsymm_mul(nsymm(NBasis::R, a), nsymm(NBasis::R, b));
      Elem<Word> want(concat(a, b));
      if (!a.empty() && !b.empty()) {
        std::vector<Letter> j(a.begin(), a.end());
        j.back() += b[0];
        j.insert(j.end(), b.begin() + 1, b.end());
        want.add_term(Word(j), 1);
      }
      EXPECT_EQ(to_basis(lhs, NBasis::R).terms, want) << key_to_string(a) << key_to_string(b);
    }
}

TEST(Nsymm, Antipode) {
  EXPECT_EQ(antipode(nsymm_def(), Elem<Word>(Word{2})), (Elem<Word>{{Word{1, 1}, 1}, {Word{2}, -1}}));
}

TEST(Qsymm, ProductExamples) {
  EXPECT_EQ(qsymm_def().product(Word{2}, Word{2, 2, 3}),
            (Elem<Word>{{Word{2, 2, 2, 3}, 3}, {Word{2, 2, 3, 2}, 1}, {Word{4, 2, 3}, 1}, {Word{2, 4, 3}, 1}, {Word{2, 2, 5}, 1}}));
  EXPECT_EQ(qsymm_def().coproduct(Word{4, 5}).size(), 3u);
}

TEST(Qsymm, FundamentalBasis) {
  EXPECT_EQ(f_to_m(Word{3}), (Elem<Word>{{Word{3}, 1}, {Word{2, 1}, 1}, {Word{1, 2}, 1}, {Word{1, 1, 1}, 1}}));
  EXPECT_EQ(f_to_m(Word{1, 2}), (Elem<Word>{{Word{1, 2}, 1}, {Word{1, 1, 1}, 1}}));
  EXPECT_EQ(f_to_m(Word{1, 1, 1}), Elem<Word>(Word{1, 1, 1}));
  for (const auto& a : words_up_to_weight(5)) EXPECT_EQ(linear_extend(m_to_f, f_to_m(a)), Elem<Word>(a));
}

TEST(Duality, NsymmQsymm) {
  Report s = check_dual_pair(nsymm_def(), qsymm_def(), Pairing<Word, Word>(nsymm_qsymm_pairing), 5);
  EXPECT_TRUE(s.passed()) << s.to_text();
  Report z = check_dual_pair(nsymm_def(), qsymm_def(), Pairing<Word, Word>(z_m_kronecker), 5);
  EXPECT_TRUE(z.passed()) << z.to_text();
}

TEST(Duality, RibbonsAgainstFundamentals) {
  for (const auto& a : words_up_to_weight(5))
    for (const auto& b : words_up_to_weight(5))
      EXPECT_EQ(pair(nsymm(NBasis::R, a), QsymmElem{QBasis::F, Elem<Word>(b)}), a == b ? 1 : 0);
}

TEST(Descents, Basics) {
  DescentSet D = desc_of_perm(Perm(Word{3, 2, 5, 7, 1, 4, 6}));
  EXPECT_EQ(D, DescentSet(7, {1, 4}));
  EXPECT_EQ(comp_of_desc(D), (Word{1, 3, 3}));
  for (int m = 0; m <= 6; ++m)
    for (const auto& E : descent_sets(m)) EXPECT_EQ(desc_of_comp(comp_of_desc(E)), E);
  EXPECT_THROW(DescentSet(3, {3}), std::invalid_argument);
}

TEST(Descents, ClassSums) {
  for (int m = 0; m <= 6; ++m) {
    std::size_t total = 0;
    for (const auto& D : descent_sets(m)) total += descent_class_sum(D).size();
    EXPECT_EQ(total, permutations(m).size());
  }
  EXPECT_EQ(descent_class_sum(DescentSet(2, {})), Elem<Perm>(Perm(Word{1, 2})));
}

TEST(Descents, ClassProductRule) {
  Report r = check_descent_class_product(6);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Embedding, BothDefinitionsAgree) {
  EXPECT_EQ(embed_i(nsymm(NBasis::S, Word{2})), Elem<Perm>(Perm(Word{1, 2})));
  EXPECT_EQ(embed_i(nsymm(NBasis::R, Word{1, 1})), Elem<Perm>(Perm(Word{2, 1})));
  for (const auto& a : words_up_to_weight(5)) {
    for (NBasis b : {NBasis::Z, NBasis::S, NBasis::R})
      EXPECT_EQ(embed_i(nsymm(b, a)), embed_i_multiplicative(nsymm(b, a))) << key_to_string(a);
    EXPECT_EQ(to_basis(embed_i_inverse(embed_i(nsymm(NBasis::Z, a))), NBasis::Z).terms, Elem<Word>(a));
  }
  EXPECT_THROW(embed_i_inverse(Elem<Perm>(Perm(Word{2, 1, 3}))), std::domain_error);
}

TEST(Embedding, IsHopfIntoSecondStructure) {
  LinearMap<Word, Perm> i = [](const Word& a) { return embed_i(nsymm(NBasis::Z, a)); };
  Report r = check_hopf_morphism(i, nsymm_def(), mpr2_def(), 5);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Projection, Pi) {
  EXPECT_EQ(project_pi(Perm(Word{3, 2, 5, 7, 1, 4, 6})).terms, Elem<Word>(Word{1, 3, 3}));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(project_pi(Perm::identity(n)).terms, Elem<Word>(Word{n}));
  LinearMap<Perm, Word> pi = project_pi_m;
  Report r = check_hopf_morphism(pi, mpr_def(), qsymm_def(), 5);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Projection, PiIsDualToI) {
  // <i(x), s>' = <x, pi(s)> with the orthonormal pairing on MPR.
  for (int n = 0; n <= 4; ++n)
    for (const auto& a : compositions(n))
      for (const auto& s : permutations(n))
        EXPECT_EQ(embed_i(nsymm(NBasis::R, a)).coeff(s), pair(nsymm(NBasis::R, a), project_pi(s)));
}

TEST(Solomon, ClosureAndIdentity) {
  Report r = check_solomon(4);
  EXPECT_TRUE(r.passed()) << r.to_text();
  NsymmElem s3 = nsymm(NBasis::S, Word{3});
  EXPECT_EQ(to_string(nsymm_second_mul(s3, s3)), "S[3]");
  EXPECT_TRUE(nsymm_second_mul(nsymm(NBasis::S, Word{1}), nsymm(NBasis::S, Word{2})).terms.empty());
}

TEST(Solomon, MixedExample) {
  // m_Pi(S_[1,2], S_[3]) and m_Pi(S_[3], S_[1,2]) are both S_[1,2]: S_3 is
  // the identity for either order.
  NsymmElem s12 = nsymm(NBasis::S, Word{1, 2}), s3 = nsymm(NBasis::S, Word{3});
  EXPECT_EQ(to_string(nsymm_second_mul(s12, s3)), "S[1,2]");
  EXPECT_EQ(to_string(nsymm_second_mul(s3, s12)), "S[1,2]");
}

TEST(Distributivity, LeftHoldsRightFails) {
  Report l = check_left_distributivity(4);
  EXPECT_TRUE(l.passed()) << l.to_text();
  Report r = check_right_distributivity(4);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.failure->input, "x=Z[1], y=Z[2], z=Z[3]");
}

TEST(Formatting, TaggedElements) {
  EXPECT_EQ(to_string(to_basis(nsymm(NBasis::S, Word{2}), NBasis::Z)), "-Z[2] + Z[1,1]");
  EXPECT_EQ(to_string(N(NBasis::R, {{Word{1}, 2}})), "2R[1]");
  EXPECT_EQ(to_string(QsymmElem{QBasis::F, Elem<Word>(Word{2})}), "F[2]");
}
