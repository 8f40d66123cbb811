#ifndef WORDHOPF_SHUFFLE_LIE_HPP
#define WORDHOPF_SHUFFLE_LIE_HPP

// Shuffle (shuffle product, cut coproduct) and its graded dual LieHopf
// (concatenation, subword coproduct), permutations acting on Shuffle, and
// convolution of endomorphisms of Shuffle represented by evaluation tables.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordhopf/dwha.hpp"
#include "wordhopf/freemod.hpp"
#include "wordhopf/hopf.hpp"
#include "wordhopf/mpr.hpp"
#include "wordhopf/word.hpp"

namespace wordhopf {

inline Tensor<Word> cut_coproduct(const Word& a) {
  Tensor<Word> out;
  for (auto& c : cuts(a)) out.add_term(std::move(c), 1);
  return out;
}

inline Tensor<Word> subword_coproduct(const Word& a) {
  Tensor<Word> out;
  for (auto& c : subwords_with_complement(a)) out.add_term(std::move(c), 1);
  return out;
}

inline HopfDef<Word> shuffle_def() {
  HopfDef<Word> h;
  h.name = "shuffle";
  h.unit = Word{};
  h.degree = [](const Word& a) { return static_cast<int>(weight(a)); };
  h.enumerate = [](int n) { return words_up_to_weight(n); };
  h.product = [](const Word& a, const Word& b) { return shuffle(a, b); };
  h.coproduct = cut_coproduct;
  return h;
}

// Basis U_alpha, product U_a U_b = U_{a*b}.
inline HopfDef<Word> liehopf_def() {
  HopfDef<Word> h = shuffle_def();
  h.name = "liehopf";
  h.product = [](const Word& a, const Word& b) { return Elem<Word>(concat(a, b)); };
  h.coproduct = subword_coproduct;
  return h;
}

// sigma sends a word of its own length to [a_{s1}, ..., a_{sm}], others to 0.
inline Elem<Word> perm_action(const Perm& s, const Word& a) {
  if (s.size() != a.size()) return {};
  Word w;
  for (Letter x : s.word()) w.push_back(a[static_cast<std::size_t>(x - 1)]);
  return Elem<Word>(w);
}

inline Elem<Word> perm_action(const Elem<Perm>& x, const Word& a) {
  Elem<Word> out;
  for (const auto& [s, c] : x) out.add_scaled(perm_action(s, a), c);
  return out;
}

// An endomorphism of Shuffle known by its values on all words of length
// <= max_len over {1..max_letter}. That domain is closed under taking cuts.
class GradedEndo {
 public:
  using Fn = std::function<Elem<Word>(const Word&)>;

  GradedEndo(int max_len, int max_letter, const Fn& f) : max_len_(max_len), max_letter_(max_letter) {
    for (const auto& w : words_bounded(max_len, max_letter)) table_.emplace(w, f(w));
  }

  const Elem<Word>& operator()(const Word& w) const {
    auto it = table_.find(w);
    if (it == table_.end()) throw std::out_of_range("word outside the tabulated domain: " + key_to_string(w));
    return it->second;
  }

  Elem<Word> operator()(const Elem<Word>& x) const {
    Elem<Word> out;
    for (const auto& [w, c] : x) out.add_scaled((*this)(w), c);
    return out;
  }

  int max_len() const { return max_len_; }
  int max_letter() const { return max_letter_; }
  // Degree shift; every endomorphism built here preserves weight.
  int shift() const { return 0; }

 private:
  int max_len_;
  int max_letter_;
  std::map<Word, Elem<Word>> table_;
};

inline GradedEndo perm_endo(const Elem<Perm>& x, int max_len, int max_letter) {
  return GradedEndo(max_len, max_letter, [x](const Word& w) { return perm_action(x, w); });
}

// e . eps
inline GradedEndo unit_endo(int max_len, int max_letter) {
  return GradedEndo(max_len, max_letter, [](const Word& w) { return w.empty() ? Elem<Word>(w) : Elem<Word>{}; });
}

// alpha -> m_Sh((f (x) g)(mu_Sh(alpha)))
inline GradedEndo convolution(const GradedEndo& f, const GradedEndo& g) {
  if (f.max_len() != g.max_len() || f.max_letter() != g.max_letter())
    throw std::invalid_argument("convolution of endomorphisms tabulated on different domains");
  return GradedEndo(f.max_len(), f.max_letter(), [&](const Word& a) {
    Elem<Word> out;
    for (const auto& [u, v] : cuts(a))
      for (const auto& [x, cx] : f(u))
        for (const auto& [y, cy] : g(v)) out.add_scaled(shuffle(x, y), checked_mul(cx, cy));
    return out;
  });
}

// The lg m (x) lg n component of mu_Sh . sigma . m_Sh evaluated on
// [a_1..a_m] (x) [b_1..b_n] with formally distinct letters (a_i = i,
// b_j = m + j), keeping terms with only a's on the left and only b's on the
// right, and standardizing both sides.
inline Tensor<Perm> coconv_component(const Perm& s, int m, int n) {
  if (m < 0 || n < 0 || static_cast<std::size_t>(m + n) != s.size())
    throw std::invalid_argument("component sizes must add up to the length of the permutation");
  Word as = Perm::identity(m).word();
  Word bs = shift(Perm::identity(n).word(), m);
  Tensor<Perm> out;
  for (const auto& [w, c] : shuffle(as, bs))
    for (const auto& [x, cx] : perm_action(s, w))
      for (const auto& [u, v] : cuts(x)) {
        bool left_a = std::all_of(u.begin(), u.end(), [m](Letter y) { return y <= m; });
        bool right_b = std::all_of(v.begin(), v.end(), [m](Letter y) { return y > m; });
        if (left_a && right_b && static_cast<int>(u.size()) == m)
          out.add_term({standardize(u), standardize(v)}, checked_mul(c, cx));
      }
  return out;
}

// ---------------------------------------------------------------------------
// Checks

// conv(sigma, tau) = m_MPR(sigma (x) tau) as endomorphisms on all words over
// {1..max_letter} of length lg sigma + lg tau.
inline Report check_convolution_identity(int max_total, int max_letter) {
  Recorder rec("convolution", "mpr", max_total);
  for (const auto& s : permutations_up_to(max_total))
    for (const auto& t : permutations_up_to(max_total - static_cast<int>(s.size()))) {
      GradedEndo fs = perm_endo(Elem<Perm>(s), max_total, max_letter);
      GradedEndo ft = perm_endo(Elem<Perm>(t), max_total, max_letter);
      GradedEndo conv = convolution(fs, ft);
      Elem<Perm> prod = mpr_mul(s, t);
      for (const auto& w : words_of_length(static_cast<int>(s.size() + t.size()), max_letter)) {
        std::string in = "sigma=" + key_to_string(s) + ", tau=" + key_to_string(t) + ", w=" + key_to_string(w);
        if (!rec.equal("conv-is-product", in, conv(w), perm_action(prod, w))) return rec.take();
      }
    }
  return rec.take();
}

// Summing coconv_component over all splits recovers mu_MPR.
inline Report check_coconvolution(int max_n) {
  Recorder rec("coconvolution", "mpr", max_n);
  for (const auto& s : permutations_up_to(max_n)) {
    Tensor<Perm> sum;
    const int n = static_cast<int>(s.size());
    for (int m = 0; m <= n; ++m) {
      Tensor<Perm> part = coconv_component(s, m, n - m);
      const auto [u, v] = cuts(s.word())[static_cast<std::size_t>(m)];
      std::string in = "sigma=" + key_to_string(s) + ", split=" + std::to_string(m);
      if (!rec.equal("component", in, part, Tensor<Perm>({standardize(u), standardize(v)}))) return rec.take();
      sum += part;
    }
    if (!rec.equal("sum-of-components", "sigma=" + key_to_string(s), sum, mpr_comul(s))) return rec.take();
  }
  return rec.take();
}

// phi_* . p = p . phi_* for every letter map phi : {1..k} -> {1..k}. For a
// non-injective phi this is only asked on words already of the pattern of
// the top word, since merging letters can create the pattern.
inline Report check_homogeneity(const std::vector<Subst>& subs, int max_letter) {
  Recorder rec("homogeneity", "subst-action", max_letter);
  auto apply = [](const std::vector<Letter>& phi, const Word& w) {
    Word out;
    for (Letter x : w) out.push_back(phi[static_cast<std::size_t>(x - 1)]);
    return out;
  };
  std::vector<std::vector<Letter>> maps;
  for (const auto& img : words_of_length(max_letter, max_letter)) maps.push_back(img.letters());
  for (const auto& p : subs)
    for (const auto& w : words_of_length(static_cast<int>(p.top().size()), max_letter)) {
      Elem<Word> pw = subst_action(p, w);
      for (const auto& phi : maps) {
        bool injective = is_injective(Word(phi));
        if (!injective && pw.empty()) continue;
        Elem<Word> lhs;
        for (const auto& [x, c] : pw) lhs.add_term(apply(phi, x), c);
        std::string in = "p=" + key_to_string(p) + ", w=" + key_to_string(w) + ", phi=" + key_to_string(Word(phi));
        if (!rec.equal("homogeneity", in, lhs, subst_action(p, apply(phi, w)))) return rec.take();
      }
    }
  return rec.take();
}

}  // namespace wordhopf

#endif  // WORDHOPF_SHUFFLE_LIE_HPP
