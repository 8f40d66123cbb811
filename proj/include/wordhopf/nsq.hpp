#ifndef WORDHOPF_NSQ_HPP
#define WORDHOPF_NSQ_HPP

// Noncommutative symmetric functions (bases Z, S, R) and quasisymmetric
// functions (bases M, F), descent sets, the embedding i of NSymm into
// (MPR, m', mu') by descent class sums, the projection pi to QSymm, and the
// second (composition) multiplication on NSymm.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordhopf/format.hpp"
#include "wordhopf/freemod.hpp"
#include "wordhopf/hopf.hpp"
#include "wordhopf/mpr.hpp"
#include "wordhopf/word.hpp"

namespace wordhopf {

// ---------------------------------------------------------------------------
// Refinement of compositions

// Compositions obtained by merging runs of adjacent parts of a.
inline std::vector<Word> coarsenings(const Word& a) {
  std::vector<Word> out;
  if (a.empty()) return {Word{}};
  const std::size_t gaps = a.size() - 1;
  for (unsigned long keep = 0; keep < (1UL << gaps); ++keep) {
    Word w;
    Letter part = a[0];
    for (std::size_t j = 0; j < gaps; ++j) {
      if (keep & (1UL << j)) {
        w.push_back(part);
        part = a[j + 1];
      } else {
        part += a[j + 1];
      }
    }
    w.push_back(part);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Compositions obtained by splitting parts of a.
inline std::vector<Word> refinements(const Word& a) {
  std::vector<Word> out{Word{}};
  for (Letter x : a) {
    std::vector<Word> next;
    for (const auto& prefix : out)
      for (const auto& c : compositions(x)) next.push_back(concat(prefix, c));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Coeff sign_of(long k) { return k % 2 == 0 ? 1 : -1; }

// ---------------------------------------------------------------------------
// NSymm

enum class NBasis { Z, S, R };
enum class QBasis { M, F };

inline std::string basis_name(NBasis b) { return b == NBasis::Z ? "Z" : b == NBasis::S ? "S" : "R"; }
inline std::string basis_name(QBasis b) { return b == QBasis::M ? "M" : "F"; }

struct NsymmElem {
  NBasis basis = NBasis::Z;
  Elem<Word> terms;
  friend bool operator==(const NsymmElem&, const NsymmElem&) = default;
};

struct QsymmElem {
  QBasis basis = QBasis::M;
  Elem<Word> terms;
  friend bool operator==(const QsymmElem&, const QsymmElem&) = default;
};

inline std::string to_string(const NsymmElem& x) {
  if (x.terms.empty()) return "0";
  std::string s;
  bool first = true;
  const std::string b = basis_name(x.basis);
  for (const auto& [k, c] : x.terms) {
    Coeff mag = c < 0 ? -c : c;
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mag != 1) s += std::to_string(mag);
    s += b + key_to_string(k);
    first = false;
  }
  return s;
}

// Z_n = sum over compositions b of n of (-1)^(n - lg b) S_b, and the same with
// Z and S exchanged; both extend multiplicatively, so the change of basis is
// an involution: X_a = sum over refinements b of a of (-1)^(wt - lg b) Y_b.
inline Elem<Word> wronski(const Word& a) {
  Elem<Word> out;
  const long n = weight(a);
  for (const auto& b : refinements(a)) out.add_term(b, sign_of(n - static_cast<long>(b.size())));
  return out;
}

inline Elem<Word> z_to_s(const Word& a) { return wronski(a); }
inline Elem<Word> s_to_z(const Word& a) { return wronski(a); }

// R_a = sum over coarsenings b of a of (-1)^(lg a - lg b) S_b.
inline Elem<Word> r_to_s(const Word& a) {
  Elem<Word> out;
  for (const auto& b : coarsenings(a)) out.add_term(b, sign_of(static_cast<long>(a.size() - b.size())));
  return out;
}

// S_a = sum over coarsenings b of a of R_b.
inline Elem<Word> s_to_r(const Word& a) {
  Elem<Word> out;
  for (const auto& b : coarsenings(a)) out.add_term(b, 1);
  return out;
}

inline Elem<Word> convert_terms(const Elem<Word>& x, Elem<Word> (*f)(const Word&)) { return linear_extend(f, x); }

inline NsymmElem to_basis(const NsymmElem& x, NBasis target) {
  if (x.basis == target) return x;
  Elem<Word> s = x.basis == NBasis::S   ? x.terms
                 : x.basis == NBasis::Z ? convert_terms(x.terms, z_to_s)
                                        : convert_terms(x.terms, r_to_s);
  switch (target) {
    case NBasis::S:
      return {NBasis::S, s};
    case NBasis::Z:
      return {NBasis::Z, convert_terms(s, s_to_z)};
    default:
      return {NBasis::R, convert_terms(s, s_to_r)};
  }
}

inline NsymmElem nsymm(NBasis b, const Word& a) { return {b, Elem<Word>(a)}; }

inline NsymmElem nsymm_mul(const NsymmElem& x, const NsymmElem& y) {
  // Concatenation is the product in the Z and S bases.
  NBasis work = x.basis == NBasis::Z ? NBasis::Z : NBasis::S;
  Elem<Word> a = to_basis(x, work).terms, b = to_basis(y, work).terms;
  NsymmElem out{work, bilinear_extend([](const Word& u, const Word& v) { return Elem<Word>(concat(u, v)); }, a, b)};
  return to_basis(out, x.basis);
}

inline NsymmElem operator+(const NsymmElem& x, const NsymmElem& y) {
  return {x.basis, x.terms + to_basis(y, x.basis).terms};
}

inline bool equal_in(const NsymmElem& x, const NsymmElem& y) { return to_basis(x, NBasis::S) == to_basis(y, NBasis::S); }

// mu(Z_a) = prod_i sum_{j+k=a_i} Z_j (x) Z_k, Z_0 = 1.
inline Tensor<Word> nsymm_comul(const Word& a) {
  Tensor<Word> out;
  out.add_term({Word{}, Word{}}, 1);
  for (Letter x : a) {
    Tensor<Word> next;
    for (const auto& [t, c] : out)
      for (Letter j = 0; j <= x; ++j) {
        Word l = t.first, r = t.second;
        if (j > 0) l.push_back(j);
        if (x - j > 0) r.push_back(x - j);
        next.add_term({std::move(l), std::move(r)}, c);
      }
    out = std::move(next);
  }
  return out;
}

inline HopfDef<Word> nsymm_def() {
  HopfDef<Word> h;
  h.name = "nsymm";
  h.unit = Word{};
  h.degree = [](const Word& a) { return static_cast<int>(weight(a)); };
  h.enumerate = [](int n) { return words_up_to_weight(n); };
  h.product = [](const Word& a, const Word& b) { return Elem<Word>(concat(a, b)); };
  h.coproduct = nsymm_comul;
  return h;
}

// ---------------------------------------------------------------------------
// QSymm

inline HopfDef<Word> qsymm_def() {
  HopfDef<Word> h = nsymm_def();
  h.name = "qsymm";
  h.product = [](const Word& a, const Word& b) { return overlapping_shuffle(a, b); };
  h.coproduct = [](const Word& a) {
    Tensor<Word> out;
    for (auto& c : cuts(a)) out.add_term(std::move(c), 1);
    return out;
  };
  return h;
}

// F_a = sum over refinements b of a of M_b.
inline Elem<Word> f_to_m(const Word& a) {
  Elem<Word> out;
  for (const auto& b : refinements(a)) out.add_term(b, 1);
  return out;
}

inline Elem<Word> m_to_f(const Word& a) {
  Elem<Word> out;
  for (const auto& b : refinements(a)) out.add_term(b, sign_of(static_cast<long>(b.size() - a.size())));
  return out;
}

inline QsymmElem to_basis(const QsymmElem& x, QBasis target) {
  if (x.basis == target) return x;
  return {target, convert_terms(x.terms, target == QBasis::M ? f_to_m : m_to_f)};
}

inline std::string to_string(const QsymmElem& x) {
  NsymmElem tmp{NBasis::Z, x.terms};
  std::string s = to_string(tmp);
  // Same layout with the QSymm basis letter.
  std::string out;
  for (char ch : s) out += ch == 'Z' ? basis_name(x.basis)[0] : ch;
  return out;
}

// Pairing of NSymm (Z basis) with QSymm (M basis) in which the S basis is
// dual to the monomials: <Z_b, M_a> is the coefficient of S_a in Z_b.
inline Coeff nsymm_qsymm_pairing(const Word& z, const Word& m) { return wronski(z).coeff(m); }

// The pairing in which the Z basis is dual to the monomials.
inline Coeff z_m_kronecker(const Word& z, const Word& m) { return z == m ? 1 : 0; }

// Pairing of arbitrary-basis elements under nsymm_qsymm_pairing.
inline Coeff pair(const NsymmElem& x, const QsymmElem& y) {
  Elem<Word> s = to_basis(x, NBasis::S).terms, m = to_basis(y, QBasis::M).terms;
  Coeff total = 0;
  for (const auto& [k, c] : s) total = checked_add(total, checked_mul(c, m.coeff(k)));
  return total;
}

// ---------------------------------------------------------------------------
// Descent sets

struct DescentSet {
  int m = 0;  // ambient size: D is a subset of {1..m-1}
  std::set<int> d;

  DescentSet() = default;
  DescentSet(int ambient, std::set<int> elems) : m(ambient), d(std::move(elems)) {
    if (m < 0) throw std::invalid_argument("negative ambient size");
    for (int x : d)
      if (x < 1 || x >= m) throw std::invalid_argument("descent positions must lie in {1..m-1}");
  }

  friend bool operator==(const DescentSet&, const DescentSet&) = default;
  friend auto operator<=>(const DescentSet& a, const DescentSet& b) {
    if (a.m != b.m) return a.m <=> b.m;
    return a.d <=> b.d;
  }
};

inline std::string to_string(const DescentSet& D) {
  std::string s = "{";
  bool first = true;
  for (int x : D.d) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + "} in {1.." + std::to_string(D.m > 0 ? D.m - 1 : 0) + "}";
}

inline DescentSet desc_of_perm(const Perm& s) {
  std::set<int> d;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] > s[i + 1]) d.insert(static_cast<int>(i + 1));
  return {static_cast<int>(s.size()), std::move(d)};
}

inline Word comp_of_desc(const DescentSet& D) {
  Word w;
  int prev = 0;
  for (int x : D.d) {
    w.push_back(x - prev);
    prev = x;
  }
  if (D.m > 0) w.push_back(D.m - prev);
  return w;
}

inline DescentSet desc_of_comp(const Word& a) {
  std::set<int> d;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) d.insert(acc += a[i]);
  return {static_cast<int>(weight(a)), std::move(d)};
}

// All descent sets with ambient m.
inline std::vector<DescentSet> descent_sets(int m) {
  std::vector<DescentSet> out;
  for (const auto& a : compositions(m)) out.push_back(desc_of_comp(a));
  std::sort(out.begin(), out.end());
  return out;
}

// Sum of all permutations of {1..m} with descent set D.
inline Elem<Perm> descent_class_sum(const DescentSet& D) {
  Elem<Perm> out;
  for (const auto& s : permutations(D.m))
    if (desc_of_perm(s) == D) out.add_term(s, 1);
  return out;
}

// ---------------------------------------------------------------------------
// i : NSymm -> (MPR, m', mu') and pi : (MPR, m, mu) -> QSymm

// R_a -> descent class sum of desc(a).
inline Elem<Perm> embed_i(const NsymmElem& x) {
  Elem<Perm> out;
  for (const auto& [a, c] : to_basis(x, NBasis::R).terms) out.add_scaled(descent_class_sum(desc_of_comp(a)), c);
  return out;
}

// The algebra map S_n -> [1..n] into (MPR, m').
inline Elem<Perm> embed_i_multiplicative(const NsymmElem& x) {
  Elem<Perm> out;
  for (const auto& [a, c] : to_basis(x, NBasis::S).terms) {
    Elem<Perm> prod(Perm{});
    for (Letter part : a)
      prod = bilinear_extend([](const Perm& u, const Perm& v) { return mpr_mul2(u, v); }, prod,
                             Elem<Perm>(Perm::identity(part)));
    out.add_scaled(prod, c);
  }
  return out;
}

// Inverse of i on its image (the span of descent class sums), in the R basis.
inline NsymmElem embed_i_inverse(const Elem<Perm>& x) {
  NsymmElem out{NBasis::R, {}};
  std::set<DescentSet> seen;
  for (const auto& [s, c] : x) {
    DescentSet D = desc_of_perm(s);
    if (seen.insert(D).second) out.terms.add_term(comp_of_desc(D), c);
  }
  if (embed_i(out) != x) throw std::domain_error("element is not a combination of descent class sums");
  return out;
}

inline QsymmElem project_pi(const Perm& s) { return {QBasis::F, Elem<Word>(comp_of_desc(desc_of_perm(s)))}; }

// pi in the monomial basis, as a map of basis keys.
inline Elem<Word> project_pi_m(const Perm& s) { return f_to_m(comp_of_desc(desc_of_perm(s))); }

// Composition on the descent algebra read back in NSymm, with x acting first
// on Shuffle: i^-1(compose(i(y), i(x))). Equivalently composition of the
// images under sigma -> sigma^-1 . i in the opposite order.
inline NsymmElem nsymm_second_mul(const NsymmElem& x, const NsymmElem& y) {
  return to_basis(embed_i_inverse(compose(embed_i(y), embed_i(x))), x.basis);
}

// ---------------------------------------------------------------------------
// Checks

// m'(theta_D (x) theta_D') = theta_D1 + theta_D2 for m + n <= max_total.
inline Report check_descent_class_product(int max_total) {
  Recorder rec("descent-class-product", "mpr2", max_total);
  std::map<DescentSet, Elem<Perm>> theta;
  auto th = [&](const DescentSet& D) -> const Elem<Perm>& {
    if (auto it = theta.find(D); it != theta.end()) return it->second;
    return theta.emplace(D, descent_class_sum(D)).first->second;
  };
  for (int m = 0; m <= max_total; ++m)
    for (int n = 0; m + n <= max_total; ++n)
      for (const auto& D : descent_sets(m))
        for (const auto& E : descent_sets(n)) {
          std::set<int> d1 = D.d, d2 = D.d;
          for (int x : E.d) {
            d1.insert(m + x);
            d2.insert(m + x);
          }
          Elem<Perm> rhs;
          if (m == 0 || n == 0) {
            rhs = th(DescentSet(m + n, d1));
          } else {
            d2.insert(m);
            rhs = th(DescentSet(m + n, d1)) + th(DescentSet(m + n, d2));
          }
          Elem<Perm> lhs = bilinear_extend([](const Perm& u, const Perm& v) { return mpr_mul2(u, v); }, th(D), th(E));
          if (!rec.equal("class-product", "D=" + to_string(D) + ", D'=" + to_string(E), lhs, rhs)) return rec.take();
        }
  return rec.take();
}

// Composites of descent class sums are combinations of descent class sums,
// and m_Pi(S_n, S_n) = S_n, m_Pi(S_a, S_b) = 0 for wt a != wt b.
inline Report check_solomon(int max_weight) {
  Recorder rec("solomon", "nsymm", max_weight);
  for (int n = 0; n <= max_weight; ++n)
    for (const auto& D : descent_sets(n))
      for (const auto& E : descent_sets(n)) {
        Elem<Perm> c = compose(descent_class_sum(D), descent_class_sum(E));
        bool ok = true;
        try {
          embed_i_inverse(c);
        } catch (const std::domain_error&) {
          ok = false;
        }
        if (!rec.holds("closure", "D=" + to_string(D) + ", D'=" + to_string(E), ok, to_string(c))) return rec.take();
      }
  for (int n = 0; n <= max_weight; ++n) {
    NsymmElem sn = nsymm(NBasis::S, n == 0 ? Word{} : Word{n});
    if (!rec.equal("identity-square", "n=" + std::to_string(n), to_string(nsymm_second_mul(sn, sn)), to_string(sn)))
      return rec.take();
  }
  for (const auto& a : words_up_to_weight(max_weight))
    for (const auto& b : words_up_to_weight(max_weight)) {
      if (weight(a) == weight(b)) continue;
      NsymmElem r = nsymm_second_mul(nsymm(NBasis::S, a), nsymm(NBasis::S, b));
      if (!rec.holds("unequal-weights", "a=" + key_to_string(a) + ", b=" + key_to_string(b), r.terms.empty(),
                     to_string(r)))
        return rec.take();
    }
  return rec.take();
}

namespace detail {

inline NsymmElem sum_of(const std::vector<NsymmElem>& xs, NBasis b) {
  NsymmElem out{b, {}};
  for (const auto& x : xs) out = out + x;
  return out;
}

}  // namespace detail

// Left distributivity of m_Pi over the product:
//   m_Pi(x, y z) = sum m_Pi(x1, y) m_Pi(x2, z),  mu(x) = sum x1 (x) x2
// on Z-basis keys with wt y + wt z <= max_weight and wt x = wt y + wt z.
inline Report check_left_distributivity(int max_weight) {
  Recorder rec("distributivity-left", "nsymm", max_weight);
  const auto keys = words_up_to_weight(max_weight);
  for (const auto& y : keys)
    for (const auto& z : keys) {
      if (weight(y) + weight(z) > max_weight) continue;
      for (const auto& x : compositions(static_cast<int>(weight(y) + weight(z)))) {
        NsymmElem lhs = nsymm_second_mul(nsymm(NBasis::Z, x), nsymm(NBasis::Z, concat(y, z)));
        std::vector<NsymmElem> parts;
        for (const auto& [t, c] : nsymm_comul(x)) {
          NsymmElem p = nsymm_mul(nsymm_second_mul(nsymm(NBasis::Z, t.first), nsymm(NBasis::Z, y)),
                                  nsymm_second_mul(nsymm(NBasis::Z, t.second), nsymm(NBasis::Z, z)));
          parts.push_back({p.basis, c * p.terms});
        }
        NsymmElem rhs = detail::sum_of(parts, NBasis::Z);
        std::string in = "x=Z" + key_to_string(x) + ", y=Z" + key_to_string(y) + ", z=Z" + key_to_string(z);
        if (!rec.equal("left-distributive", in, to_string(to_basis(lhs, NBasis::Z)), to_string(to_basis(rhs, NBasis::Z))))
          return rec.take();
      }
    }
  return rec.take();
}

// The mirrored law m_Pi(x y, z) = sum m_Pi(x, z1) m_Pi(y, z2); expected to
// fail, and the report carries the first counterexample.
inline Report check_right_distributivity(int max_weight) {
  Recorder rec("distributivity-right", "nsymm", max_weight);
  const auto keys = words_up_to_weight(max_weight);
  for (const auto& x : keys)
    for (const auto& y : keys) {
      if (weight(x) + weight(y) > max_weight) continue;
      for (const auto& z : compositions(static_cast<int>(weight(x) + weight(y)))) {
        NsymmElem lhs = nsymm_second_mul(nsymm(NBasis::Z, concat(x, y)), nsymm(NBasis::Z, z));
        std::vector<NsymmElem> parts;
        for (const auto& [t, c] : nsymm_comul(z)) {
          NsymmElem p = nsymm_mul(nsymm_second_mul(nsymm(NBasis::Z, x), nsymm(NBasis::Z, t.first)),
                                  nsymm_second_mul(nsymm(NBasis::Z, y), nsymm(NBasis::Z, t.second)));
          parts.push_back({p.basis, c * p.terms});
        }
        NsymmElem rhs = detail::sum_of(parts, NBasis::Z);
        std::string in = "x=Z" + key_to_string(x) + ", y=Z" + key_to_string(y) + ", z=Z" + key_to_string(z);
        if (!rec.equal("right-distributive", in, to_string(to_basis(lhs, NBasis::Z)),
                       to_string(to_basis(rhs, NBasis::Z))))
          return rec.take();
      }
    }
  return rec.take();
}

}  // namespace wordhopf

#endif  // WORDHOPF_NSQ_HPP
