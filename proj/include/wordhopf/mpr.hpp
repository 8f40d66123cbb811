#ifndef WORDHOPF_MPR_HPP
#define WORDHOPF_MPR_HPP

// The Malvenuto-Poirier-Reutenauer Hopf algebra of permutations, with both
// of its Hopf structures:
//
//   (m, mu)    shifted shuffle, standardized cuts
//   (m', mu')  positional concatenation, value-prefix restriction
//
// plus composition of permutations viewed as endomorphisms of Shuffle and the
// dual cocomposition.

#include <algorithm>
#include <vector>

#include "wordhopf/freemod.hpp"
#include "wordhopf/hopf.hpp"
#include "wordhopf/word.hpp"

namespace wordhopf {

inline Perm inverse(const Perm& s) {
  std::vector<Letter> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[static_cast<std::size_t>(s[i] - 1)] = static_cast<Letter>(i + 1);
  return Perm(Word(std::move(v)));
}

// sigma x_sh [m+t1, ..., m+tn]
inline Elem<Perm> mpr_mul(const Perm& s, const Perm& t) {
  Elem<Perm> out;
  for (const auto& [w, c] : shuffle(s.word(), shift(t.word(), static_cast<Letter>(s.size()))))
    out.add_term(Perm(w), c);
  return out;
}

inline Tensor<Perm> mpr_comul(const Perm& s) {
  Tensor<Perm> out;
  for (const auto& [u, v] : cuts(s.word())) out.add_term({standardize(u), standardize(v)}, 1);
  return out;
}

// Sum over m-subsets S of {1..m+n}: u spells sigma in the values of S, v
// spells tau in the complementary values, term u*v.
inline Elem<Perm> mpr_mul2(const Perm& s, const Perm& t) {
  const std::size_t m = s.size(), n = t.size();
  Elem<Perm> out;
  std::vector<bool> chosen(m + n, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(m), true);
  // prev_permutation walks every m-subset exactly once starting from the
  // lexicographically largest mask.
  do {
    std::vector<Letter> in, out_vals;
    for (std::size_t k = 0; k < m + n; ++k) (chosen[k] ? in : out_vals).push_back(static_cast<Letter>(k + 1));
    std::vector<Letter> w;
    w.reserve(m + n);
    for (std::size_t i = 0; i < m; ++i) w.push_back(in[static_cast<std::size_t>(s[i] - 1)]);
    for (std::size_t i = 0; i < n; ++i) w.push_back(out_vals[static_cast<std::size_t>(t[i] - 1)]);
    out.add_term(Perm(Word(std::move(w))), 1);
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

// tau restricted to the letters in {lo..hi}.
inline Word restrict_values(const Perm& t, Letter lo, Letter hi) {
  Word w;
  for (Letter x : t.word())
    if (x >= lo && x <= hi) w.push_back(x);
  return w;
}

inline Tensor<Perm> mpr_comul2(const Perm& t) {
  const auto n = static_cast<Letter>(t.size());
  Tensor<Perm> out;
  for (Letter i = 0; i <= n; ++i)
    out.add_term({Perm(restrict_values(t, 1, i)), standardize(restrict_values(t, i + 1, n))}, 1);
  return out;
}

// The endomorphism "first tau, then sigma" of Shuffle: [t_{s1}, ..., t_{sn}],
// zero on a length mismatch.
inline Elem<Perm> compose(const Perm& s, const Perm& t) {
  if (s.size() != t.size()) return {};
  std::vector<Letter> w;
  w.reserve(s.size());
  for (Letter x : s.word()) w.push_back(t[static_cast<std::size_t>(x - 1)]);
  return Elem<Perm>(Perm(Word(std::move(w))));
}

inline Elem<Perm> compose(const Elem<Perm>& a, const Elem<Perm>& b) {
  return bilinear_extend([](const Perm& s, const Perm& t) { return compose(s, t); }, a, b);
}

// Sum over tau in S_n of [tau^-1(r_1), ..., tau^-1(r_n)] (x) tau: the unique
// p (x) tau with compose(p, tau) = r, so cocompose is the transpose of
// compose under the orthonormal pairing.
inline Tensor<Perm> cocompose(const Perm& r) {
  Tensor<Perm> out;
  for (const auto& t : permutations(static_cast<int>(r.size()))) {
    Perm ti = inverse(t);
    std::vector<Letter> w;
    w.reserve(r.size());
    for (Letter x : r.word()) w.push_back(ti[static_cast<std::size_t>(x - 1)]);
    out.add_term({Perm(Word(std::move(w))), t}, 1);
  }
  return out;
}

inline Coeff kronecker_inverse(const Perm& s, const Perm& t) { return s.size() == t.size() && inverse(s) == t ? 1 : 0; }
inline Coeff orthonormal(const Perm& s, const Perm& t) { return s == t ? 1 : 0; }

inline HopfDef<Perm> mpr_def() {
  HopfDef<Perm> h;
  h.name = "mpr";
  h.unit = Perm{};
  h.degree = [](const Perm& p) { return static_cast<int>(p.size()); };
  h.enumerate = [](int n) { return permutations_up_to(n); };
  h.product = [](const Perm& a, const Perm& b) { return mpr_mul(a, b); };
  h.coproduct = [](const Perm& a) { return mpr_comul(a); };
  return h;
}

inline HopfDef<Perm> mpr2_def() {
  HopfDef<Perm> h = mpr_def();
  h.name = "mpr2";
  h.product = [](const Perm& a, const Perm& b) { return mpr_mul2(a, b); };
  h.coproduct = [](const Perm& a) { return mpr_comul2(a); };
  return h;
}

}  // namespace wordhopf

#endif  // WORDHOPF_MPR_HPP
