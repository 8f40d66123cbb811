#ifndef WORDHOPF_ICC_HPP
#define WORDHOPF_ICC_HPP

// The incisive cut coalgebra on compositions: ordinary cuts plus the cuts
// that split one letter a into b + c. Only a coalgebra. Its graded dual
// multiplies like ribbon Schur functions, and alpha -> F_alpha identifies it
// with QSymm.

#include <vector>

#include "wordhopf/freemod.hpp"
#include "wordhopf/hopf.hpp"
#include "wordhopf/nsq.hpp"
#include "wordhopf/word.hpp"

namespace wordhopf {

inline Tensor<Word> icc_comul(const Word& a) {
  Tensor<Word> out;
  for (auto& c : cuts(a)) out.add_term(std::move(c), 1);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (Letter b = 1; b < a[j]; ++b) {
      std::vector<Letter> left(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(j));
      left.push_back(b);
      std::vector<Letter> right{a[j] - b};
      right.insert(right.end(), a.begin() + static_cast<std::ptrdiff_t>(j + 1), a.end());
      out.add_term({Word(std::move(left)), Word(std::move(right))}, 1);
    }
  return out;
}

inline HopfDef<Word> icc_def() {
  HopfDef<Word> h;
  h.name = "icc";
  h.unit = Word{};
  h.degree = [](const Word& a) { return static_cast<int>(weight(a)); };
  h.enumerate = [](int n) { return words_up_to_weight(n); };
  h.coproduct = icc_comul;
  return h;
}

inline Elem<Word> mpr_to_icc(const Perm& s) { return Elem<Word>(comp_of_desc(desc_of_perm(s))); }

// R'_a R'_b = R'_{a*b} + R'_{a joined b}, the join adding the last letter of
// a to the first of b.
inline Elem<Word> icc_dual_mul(const Word& a, const Word& b) {
  Elem<Word> out(concat(a, b));
  if (!a.empty() && !b.empty()) {
    std::vector<Letter> j(a.begin(), a.end());
    j.back() += b[0];
    j.insert(j.end(), b.begin() + 1, b.end());
    out.add_term(Word(std::move(j)), 1);
  }
  return out;
}

// alpha -> F_alpha, written in the monomial basis of QSymm.
inline Elem<Word> icc_to_qsymm(const Word& a) { return f_to_m(a); }

// icc_dual_mul is the transpose of icc_comul under the Kronecker pairing.
inline Report check_icc_duality(int max_weight) {
  Recorder rec("icc-duality", "icc", max_weight);
  const auto keys = words_up_to_weight(max_weight);
  for (const auto& g : keys) {
    Tensor<Word> cop = icc_comul(g);
    for (const auto& a : keys)
      for (const auto& b : keys) {
        if (weight(a) + weight(b) != weight(g)) continue;
        Coeff lhs = icc_dual_mul(a, b).coeff(g);
        Coeff rhs = cop.coeff({a, b});
        if (!rec.equal("transpose", "a=" + key_to_string(a) + ", b=" + key_to_string(b) + ", c=" + key_to_string(g),
                       lhs, rhs))
          return rec.take();
      }
  }
  return rec.take();
}

// The dual product agrees with the ribbon product of NSymm.
inline Report check_icc_ribbon(int max_weight) {
  Recorder rec("icc-ribbon", "icc", max_weight);
  const auto keys = words_up_to_weight(max_weight);
  for (const auto& a : keys)
    for (const auto& b : keys) {
      if (weight(a) + weight(b) > max_weight) continue;
      NsymmElem r = to_basis(nsymm_mul(nsymm(NBasis::R, a), nsymm(NBasis::R, b)), NBasis::R);
      if (!rec.equal("ribbon", "a=" + key_to_string(a) + ", b=" + key_to_string(b), icc_dual_mul(a, b), r.terms))
        return rec.take();
    }
  return rec.take();
}

}  // namespace wordhopf

#endif  // WORDHOPF_ICC_HPP
