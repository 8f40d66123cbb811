#include <gtest/gtest.h>

#include "wordhopf/wordhopf.hpp"

using namespace wordhopf;

namespace {
const SubstCap kCap{3, 3};
Subst S(std::initializer_list<Letter> t, std::initializer_list<Letter> b) { return Subst(Word(t), Word(b)); }
}  // namespace

TEST(Subst, CanonicalForm) {
  Subst a = S({7, 6, 7, 2, 2, 7, 5}, {6, 2, 6, 5, 7});
  EXPECT_EQ(a.top(), (Word{1, 2, 1, 3, 3, 1, 4}));
  EXPECT_EQ(a.bottom(), (Word{2, 3, 2, 4, 1}));
  // y3 -> 3, z4 -> 4, x2 -> 2, x1 -> 1 in another alphabet
  EXPECT_EQ(S({3, 4, 3, 2, 2, 3, 1}, {4, 2, 4, 1, 3}), a);
  EXPECT_TRUE(S({}, {}).empty());
  EXPECT_THROW(S({1, 2}, {1}), std::invalid_argument);
}

TEST(Subst, Degree) {
  EXPECT_EQ(degree(S({7, 6, 7, 2, 2, 7, 5}, {6, 2, 6, 5, 7})), 4);
  EXPECT_EQ(degree(Subst{}), 0);
  for (const auto& s : permutations_up_to(4)) EXPECT_EQ(degree(embed_dwha(s)), static_cast<int>(s.size()));
}

TEST(Dwha, Product) {
  Subst one = S({1}, {1});
  EXPECT_EQ(dwha_mul(one, one), (Elem<Subst>{{S({1, 2}, {1, 2}), 1}, {S({1, 2}, {2, 1}), 1}}));
  EXPECT_EQ(dwha_mul(Subst{}, one), Elem<Subst>(one));
  const auto keys = enumerate_subst(3, 3);
  for (const auto& p : keys)
    for (const auto& q : keys)
      for (const auto& [r, c] : dwha_mul(p, q)) EXPECT_EQ(degree(r), degree(p) + degree(q));
}

TEST(Dwha, CoproductWorkedExample) {
  Subst p = S({1, 2, 1, 3, 3, 1, 4, 1, 4}, {2, 3, 2, 4, 1});
  Tensor<Subst> mu = dwha_comul(p);
  EXPECT_EQ(mu.size(), 4u);
  EXPECT_EQ(mu.coeff({Subst{}, p}), 1);
  EXPECT_EQ(mu.coeff({p, Subst{}}), 1);
  EXPECT_EQ(mu.coeff({S({2, 3, 3}, {2, 3, 2}), S({1, 1, 1, 4, 1, 4}, {4, 1})}), 1);
  EXPECT_EQ(mu.coeff({S({2, 3, 3, 4, 4}, {2, 3, 2, 4}), S({1, 1, 1, 1}, {1})}), 1);
  EXPECT_EQ(dwha_comul(Subst{}), Tensor<Subst>({Subst{}, Subst{}}));
}

TEST(Dwha, Swap) {
  for (const auto& p : enumerate_subst(3, 3)) EXPECT_EQ(swap(swap(p)), p);
  for (const auto& s : permutations_up_to(4)) EXPECT_EQ(swap(embed_dwha(s)), embed_dwha(inverse(s)));
  EXPECT_EQ(swap(Subst{}), Subst{});
}

TEST(Dwha, SecondStructure) {
  Subst one = S({1}, {1});
  EXPECT_EQ(dwha_mul2(one, one), (Elem<Subst>{{S({1, 2}, {1, 2}), 1}, {S({2, 1}, {1, 2}), 1}}));
  Report r = check_second_structure(kCap);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_TRUE(check_bialgebra(dwha2_def({2, 3}), dwha_bound({2, 3})).passed());
}

TEST(Dwha, InnerProduct) {
  for (const auto& p : enumerate_subst(3, 3)) EXPECT_EQ(inner_product(p, swap(p)), 1);
  EXPECT_EQ(inner_product(S({1}, {1}), S({1, 1}, {1, 1})), 0);
  for (const auto& a : permutations_up_to(3))
    for (const auto& b : permutations_up_to(3))
      EXPECT_EQ(inner_product(embed_dwha(a), embed_dwha(b)), kronecker_inverse(a, b));
}

TEST(Dwha, SelfDual) {
  Report r = check_dual_pair(dwha_def(kCap), dwha_def(kCap), Pairing<Subst, Subst>(inner_product), dwha_bound(kCap));
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Dwha, Families) {
  Subst p = S({1, 2, 1, 3, 3, 1, 4}, {2, 3, 2, 4, 1});
  EXPECT_FALSE(is_injective(p));
  EXPECT_FALSE(is_surjective(p));
  for (const auto& s : permutations_up_to(3)) {
    Subst e = embed_dwha(s);
    EXPECT_TRUE(is_injective(e) && is_surjective(e) && is_msupp_equal(e) && is_bounded(e, 1));
  }
  Subst q = S({1, 1}, {1, 1});
  EXPECT_TRUE(is_msupp_equal(q));
  EXPECT_TRUE(is_bounded(q, 2));
  EXPECT_FALSE(is_bounded(q, 1));
}

TEST(Dwha, FamiliesAreClosed) {
  auto run = [](const std::string& name, std::function<bool(const Subst&)> f) {
    Report r = check_family_closure(name, f, kCap);
    EXPECT_TRUE(r.passed()) << r.to_text();
  };
  run("injective", [](const Subst& p) { return is_injective(p); });
  run("surjective", [](const Subst& p) { return is_surjective(p); });
  run("msupp-equal", is_msupp_equal);
  run("bounded-2", [](const Subst& p) { return is_bounded(p, 2); });
  run("wha", is_wha);
}

TEST(Dwha, JmultIsHopfIdeal) {
  Report r = check_jmult_ideal(kCap);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Dwha, ProjectionToMpr) {
  EXPECT_EQ(project_mpr(embed_dwha(Perm(Word{2, 1}))), Elem<Perm>(Perm(Word{2, 1})));
  EXPECT_TRUE(project_mpr(S({1, 1}, {1, 1})).empty());
  for (const auto& s : permutations_up_to(4)) EXPECT_EQ(project_mpr(embed_dwha(s)), Elem<Perm>(s));
}

TEST(Dwha, EmbeddingIsHopf) {
  LinearMap<Perm, Subst> e = [](const Perm& s) { return Elem<Subst>(embed_dwha(s)); };
  EXPECT_TRUE(check_hopf_morphism(e, mpr_def(), dwha_def(kCap), 4).passed());
  EXPECT_EQ(embed_dwha(Perm(Word{2, 1})), S({1, 2}, {2, 1}));
}

TEST(Dwha, Enumeration) {
  EXPECT_EQ(enumerate_subst(3, 3).size(), 48u);
  EXPECT_EQ(enumerate_subst(0, 0).size(), 1u);
  // capped sets are closed under coproduct factors
  const auto keys = enumerate_subst(2, 2);
  std::set<Subst> ks(keys.begin(), keys.end());
  for (const auto& p : keys)
    for (const auto& [t, c] : dwha_comul(p)) EXPECT_TRUE(ks.count(t.first) && ks.count(t.second));
}

TEST(Dwha, SubstitutionAction) {
  Subst p = encode(Word{3, 2, 7, 2, 4});
  EXPECT_EQ(subst_action(p, Word{2, 2, 3, 4, 7, 7, 7}), Elem<Word>(Word{3, 2, 7, 2, 4}));
  EXPECT_TRUE(subst_action(p, Word{2, 2, 3, 4, 7, 7}).empty());
  EXPECT_TRUE(subst_action(p, Word{2, 1, 3, 4, 7, 7, 7}).empty());
  // equalities only: distinct top letters may receive equal letters
  EXPECT_EQ(subst_action(S({1, 2}, {2, 1}), Word{5, 5}), Elem<Word>(Word{5, 5}));
  // MPR acts through its embedding as permutations do
  for (const auto& s : permutations_up_to(3))
    for (const auto& w : words_of_length(static_cast<int>(s.size()), 3))
      EXPECT_EQ(subst_action(embed_dwha(s), w), perm_action(s, w));
}
