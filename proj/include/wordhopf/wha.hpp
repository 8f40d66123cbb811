#ifndef WORDHOPF_WHA_HPP
#define WORDHOPF_WHA_HPP

// The word Hopf algebra WHA on plain words. A word alpha with sorted support
// a'_1 < ... < a'_k is encoded as the substitution with staircase top
// [1^r1, ..., k^rk], r_i = a'_i - a'_(i-1), and bottom the surjective
// standardization of alpha. The product (shift by height, then shuffle) and
// the coproduct are those of dWHA read through this encoding.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordhopf/dwha.hpp"
#include "wordhopf/freemod.hpp"
#include "wordhopf/hopf.hpp"
#include "wordhopf/word.hpp"

namespace wordhopf {

inline Subst encode(const Word& a) {
  std::vector<Letter> top;
  Letter prev = 0, block = 0;
  for (Letter x : support(a)) {
    ++block;
    top.insert(top.end(), static_cast<std::size_t>(x - prev), block);
    prev = x;
  }
  return Subst::trusted(Word(std::move(top)), surjective_standardize(a));
}

// Equal letters of the top are contiguous; for canonical tops this means the
// top is weakly increasing.
inline bool is_wha(const Subst& p) { return std::is_sorted(p.top().begin(), p.top().end()); }

inline Word decode(const Subst& p) {
  if (!is_wha(p)) throw std::invalid_argument("top word is not a staircase: " + key_to_string(p));
  std::vector<Letter> partial{0};
  for (Letter x : p.top()) {
    if (static_cast<std::size_t>(x) == partial.size()) partial.push_back(partial.back());
    ++partial[static_cast<std::size_t>(x)];
  }
  std::vector<Letter> out;
  out.reserve(p.bottom().size());
  for (Letter x : p.bottom()) out.push_back(partial[static_cast<std::size_t>(x)]);
  return Word(std::move(out));
}

// alpha x_sh (beta + ht(alpha))
inline Elem<Word> wha_mul(const Word& a, const Word& b) { return shuffle(a, shift(b, height(a))); }

inline Tensor<Word> wha_comul(const Word& a) {
  Tensor<Word> out;
  for (const auto& [t, c] : dwha_comul(encode(a))) out.add_term({decode(t.first), decode(t.second)}, c);
  return out;
}

// Word-level form of the same coproduct. Over each good cut a = a1*a2, a
// letter x of a_i becomes the sum of the gaps g(y) = y - (predecessor of y in
// supp(a), or 0) over the y in supp(a_i) with y <= x.
inline Tensor<Word> wha_comul_direct(const Word& a) {
  std::map<Letter, Letter> gap;
  Letter prev = 0;
  for (Letter y : support(a)) {
    gap[y] = y - prev;
    prev = y;
  }
  auto relabel = [&](const Word& part) {
    std::map<Letter, Letter> value;
    Letter acc = 0;
    for (Letter y : support(part)) value[y] = acc += gap[y];
    Word w;
    for (Letter x : part) w.push_back(value[x]);
    return w;
  };
  Tensor<Word> out;
  for (const auto& [u, v] : good_cuts(a)) out.add_term({relabel(u), relabel(v)}, 1);
  return out;
}

// The action of alpha on Shuffle, through its substitution.
inline Elem<Word> wha_action(const Word& a, const Word& w) { return subst_action(encode(a), w); }

enum class WhaGrading { Content, Length, Height };

inline int wha_degree(const Word& a, WhaGrading g) {
  switch (g) {
    case WhaGrading::Length:
      return static_cast<int>(a.size());
    case WhaGrading::Height:
      return height(a);
    default:
      return static_cast<int>(content(a));
  }
}

struct WhaOptions {
  WhaGrading grading = WhaGrading::Content;
  // 0: enumerate by weight <= bound. Otherwise enumerate words of length <=
  // bound with letters <= max_letter.
  int max_letter = 0;
};

inline HopfDef<Word> wha_def(WhaOptions opt = {}) {
  HopfDef<Word> h;
  h.name = "wha";
  h.unit = Word{};
  h.degree = [g = opt.grading](const Word& a) { return wha_degree(a, g); };
  if (opt.max_letter > 0) {
    h.size = [](const Word& a) { return static_cast<int>(a.size()); };
    h.enumerate = [ml = opt.max_letter](int bound) { return words_bounded(bound, ml); };
  } else {
    h.size = [](const Word& a) { return static_cast<int>(weight(a)); };
    h.enumerate = [](int bound) { return words_up_to_weight(bound); };
  }
  h.product = [](const Word& a, const Word& b) { return wha_mul(a, b); };
  h.coproduct = [](const Word& a) { return wha_comul(a); };
  return h;
}

// Hopf retraction onto the surjective words.
inline Elem<Word> std_surj_retract(const Word& a) { return Elem<Word>(surjective_standardize(a)); }

// Algebra map to MPR that does not respect the coproducts.
inline Elem<Perm> schensted_to_mpr(const Word& a) { return Elem<Perm>(standardize(a)); }

// ---------------------------------------------------------------------------
// Checks

// Products and coproduct factors of family members stay in the family.
inline Report check_word_family_closure(const std::string& family, const std::function<bool(const Word&)>& in_family,
                                        int max_weight) {
  Recorder rec("family-closure", family, max_weight);
  std::vector<Word> members;
  for (auto& w : words_up_to_weight(max_weight))
    if (in_family(w)) members.push_back(std::move(w));
  for (const auto& a : members) {
    for (const auto& [t, c] : wha_comul(a))
      if (!rec.holds("coproduct-closed", "a=" + key_to_string(a), in_family(t.first) && in_family(t.second),
                     key_to_string(t)))
        return rec.take();
    for (const auto& b : members) {
      if (weight(a) + weight(b) > max_weight) continue;
      for (const auto& [r, c] : wha_mul(a, b))
        if (!rec.holds("product-closed", "a=" + key_to_string(a) + ", b=" + key_to_string(b), in_family(r),
                       key_to_string(r)))
          return rec.take();
    }
  }
  return rec.take();
}

// Uniform choice among the 2^(n-1) compositions of a uniform n in [0, max_weight].
inline Word random_word(std::mt19937_64& rng, int max_weight) {
  int n = std::uniform_int_distribution<int>(0, max_weight)(rng);
  Word w;
  int part = 1;
  for (int j = 1; j < n; ++j) {
    if (rng() & 1U) {
      w.push_back(part);
      part = 1;
    } else {
      ++part;
    }
  }
  if (n > 0) w.push_back(part);
  return w;
}

// Word-level product and both word-level coproducts against the dWHA
// operations read through encode/decode, on random pairs.
inline Report check_wha_oracles(int pairs, int max_weight, std::uint64_t seed) {
  Recorder rec("wha-oracle", "wha", max_weight);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < pairs; ++i) {
    Word a = random_word(rng, max_weight), b = random_word(rng, max_weight);
    std::string in = "a=" + key_to_string(a) + ", b=" + key_to_string(b);
    Elem<Word> via;
    for (const auto& [p, c] : dwha_mul(encode(a), encode(b))) via.add_term(decode(p), c);
    if (!rec.equal("mul", in, wha_mul(a, b), via)) return rec.take();
    if (!rec.equal("decode-encode", in, decode(encode(a)), a)) return rec.take();
    if (!rec.equal("comul", "a=" + key_to_string(a), wha_comul_direct(a), wha_comul(a))) return rec.take();
  }
  return rec.take();
}

}  // namespace wordhopf

#endif  // WORDHOPF_WHA_HPP
