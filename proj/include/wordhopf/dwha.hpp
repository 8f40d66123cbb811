#ifndef WORDHOPF_DWHA_HPP
#define WORDHOPF_DWHA_HPP

// Substitutions (pairs of words with equal support, up to relabeling) and the
// double word Hopf algebra dWHA with its two Hopf structures.
//
//   m   (rho|sigma)(rho'|sigma') = (rho * rho' | sigma x_sh sigma')
//   mu  sum over good cuts sigma = s1*s2 of (p^-1(s1)|s1) (x) (p^-1(s2)|s2)
//   m'  (rho x_sh rho' | sigma * sigma')
//   mu' sum over good cuts of the top word
//
// with q's letters made disjoint from p's before multiplying. swap exchanges
// the two words and carries (m, mu) to (m', mu').

#include <algorithm>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wordhopf/format.hpp"
#include "wordhopf/freemod.hpp"
#include "wordhopf/hopf.hpp"
#include "wordhopf/word.hpp"

namespace wordhopf {

class Subst {
 public:
  Subst() = default;

  // Relabels by first occurrence in the top word.
  Subst(const Word& top, const Word& bottom) {
    if (support(top) != support(bottom)) throw std::invalid_argument("top and bottom words must have equal support");
    std::map<Letter, Letter> relabel;
    for (Letter x : top) relabel.try_emplace(x, static_cast<Letter>(relabel.size() + 1));
    std::vector<Letter> t, b;
    t.reserve(top.size());
    b.reserve(bottom.size());
    for (Letter x : top) t.push_back(relabel[x]);
    for (Letter x : bottom) b.push_back(relabel[x]);
    top_ = Word(std::move(t));
    bottom_ = Word(std::move(b));
  }

  // For words already known to be canonical.
  static Subst trusted(Word top, Word bottom) {
    Subst p;
    p.top_ = std::move(top);
    p.bottom_ = std::move(bottom);
    return p;
  }

  const Word& top() const { return top_; }
  const Word& bottom() const { return bottom_; }
  bool empty() const { return top_.empty(); }

  friend bool operator==(const Subst&, const Subst&) = default;
  friend std::strong_ordering operator<=>(const Subst& a, const Subst& b) {
    if (auto c = a.top_ <=> b.top_; c != 0) return c;
    return a.bottom_ <=> b.bottom_;
  }

 private:
  Word top_;
  Word bottom_;
};

inline Subst canonicalize(const Word& top, const Word& bottom) { return Subst(top, bottom); }

inline int degree(const Subst& p) { return static_cast<int>(content(p.top())); }

inline Subst swap(const Subst& p) { return Subst(p.bottom(), p.top()); }

// ---------------------------------------------------------------------------
// Literals: (top | bottom)

inline std::string key_to_string(const Subst& p) {
  return "(" + key_to_string(p.top()) + " | " + key_to_string(p.bottom()) + ")";
}

inline nlohmann::json key_to_json(const Subst& p) {
  return {{"top", key_to_json(p.top())}, {"bottom", key_to_json(p.bottom())}};
}

inline Subst parse_subst(Cursor& in) {
  std::size_t at = in.position();
  in.expect("(");
  Word top = parse_word(in);
  in.expect("|");
  Word bottom = parse_word(in);
  in.expect(")");
  if (support(top) != support(bottom)) throw ParseError("top and bottom words must have equal support", at);
  return Subst(top, bottom);
}

inline Subst parse_subst(std::string_view text) {
  return parse_all(text, [](Cursor& c) { return parse_subst(c); });
}

// ---------------------------------------------------------------------------
// First structure

inline Elem<Subst> dwha_mul(const Subst& p, const Subst& q) {
  const auto k = static_cast<Letter>(degree(p));
  Word top = concat(p.top(), shift(q.top(), k));
  Elem<Subst> out;
  // The concatenated top is canonical already: q's letters first occur after
  // all of p's, in order.
  for (const auto& [w, c] : shuffle(p.bottom(), shift(q.bottom(), k))) out.add_term(Subst::trusted(top, w), c);
  return out;
}

inline Tensor<Subst> dwha_comul(const Subst& p) {
  Tensor<Subst> out;
  for (const auto& [s1, s2] : good_cuts(p.bottom())) {
    out.add_term({Subst(restrict_to(p.top(), support(s1)), s1), Subst(restrict_to(p.top(), support(s2)), s2)}, 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Second structure, directly

inline Elem<Subst> dwha_mul2(const Subst& p, const Subst& q) {
  const auto k = static_cast<Letter>(degree(p));
  Word bottom = concat(p.bottom(), shift(q.bottom(), k));
  Elem<Subst> out;
  for (const auto& [w, c] : shuffle(p.top(), shift(q.top(), k))) out.add_term(Subst(w, bottom), c);
  return out;
}

inline Tensor<Subst> dwha_comul2(const Subst& p) {
  Tensor<Subst> out;
  for (const auto& [r1, r2] : good_cuts(p.top())) {
    out.add_term({Subst(r1, restrict_to(p.bottom(), support(r1))), Subst(r2, restrict_to(p.bottom(), support(r2)))},
                 1);
  }
  return out;
}

// Second structure, by transport through swap.

inline Elem<Subst> swap(const Elem<Subst>& x) {
  return linear_extend([](const Subst& p) { return Elem<Subst>(swap(p)); }, x);
}

inline Elem<Subst> dwha_mul2_transport(const Subst& p, const Subst& q) { return swap(dwha_mul(swap(p), swap(q))); }

inline Tensor<Subst> dwha_comul2_transport(const Subst& p) {
  Tensor<Subst> out;
  for (const auto& [t, c] : dwha_comul(swap(p))) out.add_term({swap(t.first), swap(t.second)}, c);
  return out;
}

// ---------------------------------------------------------------------------
// Inner products

// 1 iff q is p with top and bottom exchanged.
inline Coeff inner_product(const Subst& p, const Subst& q) { return p == swap(q) ? 1 : 0; }

// Substitutions as an orthonormal basis.
inline Coeff orthonormal(const Subst& p, const Subst& q) { return p == q ? 1 : 0; }

// ---------------------------------------------------------------------------
// Sub-families

inline bool is_injective(const Subst& p) { return is_injective(p.bottom()); }
inline bool is_surjective(const Subst& p) { return is_injective(p.top()); }
inline bool is_msupp_equal(const Subst& p) { return multisupport(p.top()) == multisupport(p.bottom()); }

inline bool is_bounded(const Subst& p, int b) {
  auto ok = [b](const Word& w) {
    for (const auto& [x, r] : multisupport(w))
      if (r > b) return false;
    return true;
  };
  return ok(p.top()) && ok(p.bottom());
}

// Spanning set of the Hopf ideal J_mult: some letter repeats in either word.
inline bool in_jmult(const Subst& p) { return !(is_injective(p.top()) && is_injective(p.bottom())); }

// ---------------------------------------------------------------------------
// Action on Shuffle

// p = (rho|sigma) sends w to [x_{s1}, ..., x_{sn}] when lg(w) = lg(rho) and w
// repeats a letter wherever rho does (x_k being the letter of w under the
// k's of rho); otherwise to zero.
inline Elem<Word> subst_action(const Subst& p, const Word& w) {
  if (w.size() != p.top().size()) return {};
  std::vector<Letter> x(static_cast<std::size_t>(degree(p)) + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter& slot = x[static_cast<std::size_t>(p.top()[i])];
    if (slot == 0)
      slot = w[i];
    else if (slot != w[i])
      return {};
  }
  Word out;
  for (Letter k : p.bottom()) out.push_back(x[static_cast<std::size_t>(k)]);
  return Elem<Word>(out);
}

// ---------------------------------------------------------------------------
// MPR inside dWHA

inline Subst embed_dwha(const Perm& s) {
  return Subst::trusted(Perm::identity(static_cast<int>(s.size())).word(), s.word());
}

// The permutation p if neither word repeats a letter, else 0.
inline Elem<Perm> project_mpr(const Subst& p) {
  if (in_jmult(p)) return {};
  return Elem<Perm>(Perm(p.bottom()));
}

// ---------------------------------------------------------------------------
// Enumeration

// Canonical top words (restricted growth words) of length <= max_len.
inline std::vector<Word> canonical_tops(int max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter a = 1; a <= height(w) + 1; ++a) {
        Word v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// All substitutions with lg(top) <= max_top and lg(bottom) <= max_bottom.
inline std::vector<Subst> enumerate_subst(int max_top, int max_bottom) {
  if (max_top < 0 || max_bottom < 0) throw std::invalid_argument("substitution caps must be nonnegative");
  std::vector<Subst> out;
  for (const auto& top : canonical_tops(max_top)) {
    const int k = height(top);
    for (int len = k; len <= max_bottom; ++len)
      for (auto& w : words_of_length(len, k))
        if (static_cast<int>(content(w)) == k) out.push_back(Subst::trusted(top, std::move(w)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct SubstCap {
  int top = 0;
  int bottom = 0;
};

// Size measure for bounding tuples in checks.
inline int subst_size(const Subst& p) {
  return static_cast<int>(std::max(p.top().size(), p.bottom().size()));
}

// Every homogeneous piece has infinite rank, so the enumeration cap is part of
// the definition. Tuples are bounded by the sum of subst_size.
inline HopfDef<Subst> dwha_def(SubstCap cap) {
  HopfDef<Subst> h;
  h.name = "dwha";
  h.unit = Subst{};
  h.degree = [](const Subst& p) { return degree(p); };
  h.size = subst_size;
  h.enumerate = [cap](int) { return enumerate_subst(cap.top, cap.bottom); };
  h.product = [](const Subst& p, const Subst& q) { return dwha_mul(p, q); };
  h.coproduct = [](const Subst& p) { return dwha_comul(p); };
  return h;
}

inline HopfDef<Subst> dwha2_def(SubstCap cap) {
  HopfDef<Subst> h = dwha_def(cap);
  h.name = "dwha2";
  h.product = [](const Subst& p, const Subst& q) { return dwha_mul2(p, q); };
  h.coproduct = [](const Subst& p) { return dwha_comul2(p); };
  return h;
}

// Default bound for a capped enumeration: every pair of enumerated keys.
inline int dwha_bound(SubstCap cap) { return 2 * std::max(cap.top, cap.bottom); }

// ---------------------------------------------------------------------------
// Closure checks

// Products and coproduct factors of family members stay in the family.
inline Report check_family_closure(const std::string& family, const std::function<bool(const Subst&)>& in_family,
                                   SubstCap cap) {
  Recorder rec("family-closure", family, std::max(cap.top, cap.bottom));
  std::vector<Subst> members;
  for (auto& p : enumerate_subst(cap.top, cap.bottom))
    if (in_family(p)) members.push_back(std::move(p));
  for (const auto& p : members) {
    for (const auto& [t, c] : dwha_comul(p)) {
      if (!rec.holds("coproduct-closed", "p=" + key_to_string(p), in_family(t.first) && in_family(t.second),
                     key_to_string(t)))
        return rec.take();
    }
    for (const auto& q : members)
      for (const auto& [r, c] : dwha_mul(p, q))
        if (!rec.holds("product-closed", "p=" + key_to_string(p) + ", q=" + key_to_string(q), in_family(r),
                       key_to_string(r)))
          return rec.take();
  }
  return rec.take();
}

// J_mult is a two-sided ideal with mu(J) in J (x) H + H (x) J.
inline Report check_jmult_ideal(SubstCap cap) {
  Recorder rec("hopf-ideal", "jmult", std::max(cap.top, cap.bottom));
  const auto keys = enumerate_subst(cap.top, cap.bottom);
  for (const auto& p : keys) {
    if (!in_jmult(p)) continue;
    for (const auto& [t, c] : dwha_comul(p))
      if (!rec.holds("coideal", "p=" + key_to_string(p), in_jmult(t.first) || in_jmult(t.second), key_to_string(t)))
        return rec.take();
    for (const auto& q : keys) {
      std::string in = "p=" + key_to_string(p) + ", q=" + key_to_string(q);
      for (const auto& [r, c] : dwha_mul(p, q))
        if (!rec.holds("ideal-right", in, in_jmult(r), key_to_string(r))) return rec.take();
      for (const auto& [r, c] : dwha_mul(q, p))
        if (!rec.holds("ideal-left", in, in_jmult(r), key_to_string(r))) return rec.take();
    }
  }
  return rec.take();
}

// Direct second structure against swap transport on every key and pair.
inline Report check_second_structure(SubstCap cap) {
  Recorder rec("second-structure", "dwha", std::max(cap.top, cap.bottom));
  const auto keys = enumerate_subst(cap.top, cap.bottom);
  for (const auto& p : keys) {
    if (!rec.equal("comul2", "p=" + key_to_string(p), dwha_comul2(p), dwha_comul2_transport(p))) return rec.take();
    for (const auto& q : keys)
      if (!rec.equal("mul2", "p=" + key_to_string(p) + ", q=" + key_to_string(q), dwha_mul2(p, q),
                     dwha_mul2_transport(p, q)))
        return rec.take();
  }
  return rec.take();
}

}  // namespace wordhopf

#endif  // WORDHOPF_DWHA_HPP
