#ifndef WORDHOPF_DESCENT_HPP
#define WORDHOPF_DESCENT_HPP

// Descent classes: their lexicographically smallest (lsd) and largest (lld)
// members, global ascents and descents, the left weak order and its Hasse
// diagram, the algebra retraction psi of i, and coalgebra sections of pi.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wordhopf/hopf.hpp"
#include "wordhopf/mpr.hpp"
#include "wordhopf/nsq.hpp"
#include "wordhopf/word.hpp"

namespace wordhopf {

inline std::set<int> asc(const Perm& s) {
  std::set<int> out;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] < s[i + 1]) out.insert(static_cast<int>(i + 1));
  return out;
}

inline std::set<int> desc(const Perm& s) { return desc_of_perm(s).d; }

// p is a global ascent when everything up to p is below everything after.
inline std::set<int> gasc(const Perm& s) {
  std::set<int> out;
  Letter run_max = 0;
  for (std::size_t p = 1; p < s.size(); ++p) {
    run_max = std::max(run_max, s[p - 1]);
    // Positions 1..p hold values {1..p} exactly when their maximum is p.
    if (run_max == static_cast<Letter>(p)) out.insert(static_cast<int>(p));
  }
  return out;
}

inline std::set<int> gdesc(const Perm& s) {
  std::set<int> out;
  const auto n = static_cast<Letter>(s.size());
  Letter run_min = n + 1;
  for (std::size_t p = 1; p < s.size(); ++p) {
    run_min = std::min(run_min, s[p - 1]);
    if (run_min == n - static_cast<Letter>(p) + 1) out.insert(static_cast<int>(p));
  }
  return out;
}

// [m+1-a_1, ..., m+1-a_m]
inline Perm complement(const Perm& s) {
  const auto m = static_cast<Letter>(s.size());
  std::vector<Letter> v;
  for (Letter x : s.word()) v.push_back(m + 1 - x);
  return Perm(Word(std::move(v)));
}

inline DescentSet complement(const DescentSet& D) {
  std::set<int> c;
  for (int i = 1; i < D.m; ++i)
    if (!D.d.count(i)) c.insert(i);
  return {D.m, std::move(c)};
}

// Positions split into maximal runs joined by descents; the runs receive
// consecutive values left to right, each written decreasing.
inline Perm lsd(const DescentSet& D) {
  std::vector<Letter> v(static_cast<std::size_t>(D.m));
  int start = 0;
  while (start < D.m) {
    int end = start;
    while (end + 1 < D.m && D.d.count(end + 1)) ++end;
    for (int pos = start; pos <= end; ++pos) v[static_cast<std::size_t>(pos)] = static_cast<Letter>(end - (pos - start) + 1);
    start = end + 1;
  }
  return Perm(Word(std::move(v)));
}

inline Perm lld(const DescentSet& D) { return complement(lsd(complement(D))); }

inline bool is_lsd(const Perm& s) { return lsd(desc_of_perm(s)) == s; }
inline bool is_lld(const Perm& s) { return lld(desc_of_perm(s)) == s; }

// Brute-force oracles: scan S_m in lexicographic order.
inline Perm lex_min_in_class(const DescentSet& D) {
  for (const auto& s : permutations(D.m))
    if (desc_of_perm(s) == D) return s;
  throw std::logic_error("empty descent class");
}

inline Perm lex_max_in_class(const DescentSet& D) {
  auto all = permutations(D.m);
  for (auto it = all.rbegin(); it != all.rend(); ++it)
    if (desc_of_perm(*it) == D) return *it;
  throw std::logic_error("empty descent class");
}

// ---------------------------------------------------------------------------
// Left weak order

using InvSet = std::set<std::pair<int, int>>;

inline InvSet inversions(const Perm& s) {
  InvSet out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) out.emplace(static_cast<int>(i + 1), static_cast<int>(j + 1));
  return out;
}

inline bool lwo_leq(const Perm& s, const Perm& t) {
  if (s.size() != t.size()) throw std::invalid_argument("weak order compares permutations of equal length");
  InvSet a = inversions(s), b = inversions(t);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Elements covered by s: exchange the values k+1 and k when k+1 stands to
// the left of k.
inline std::vector<Perm> covers(const Perm& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(s[i])] = i;
  std::vector<Perm> out;
  for (std::size_t k = 1; k < n; ++k) {
    if (pos[k + 1] < pos[k]) {
      std::vector<Letter> v(s.word().letters());
      std::swap(v[pos[k]], v[pos[k + 1]]);
      out.emplace_back(Word(std::move(v)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct HasseGraph {
  int n = 0;
  std::vector<Perm> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (upper, lower) vertex indices
  std::optional<DescentSet> highlight;
};

inline HasseGraph hasse(int n, std::optional<DescentSet> highlight = std::nullopt) {
  if (highlight && highlight->m != n) throw std::invalid_argument("highlighted descent set has the wrong ambient size");
  HasseGraph g;
  g.n = n;
  g.highlight = std::move(highlight);
  g.vertices = permutations(n);
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (const auto& t : covers(g.vertices[i])) g.edges.emplace_back(i, index.at(t));
  return g;
}

// Graphviz description; rank = number of inversions.
inline std::string to_dot(const HasseGraph& g) {
  std::ostringstream out;
  out << "digraph lwo_S" << g.n << " {\n  rankdir=BT;\n";
  auto name = [](const Perm& p) {
    std::string s;
    for (Letter x : p.word()) s += std::to_string(x);
    return s.empty() ? std::string("e") : s;
  };
  std::map<std::size_t, std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& p = g.vertices[i];
    std::size_t rank = inversions(p).size();
    layers[rank].push_back(i);
    out << "  \"" << name(p) << "\" [label=\"" << key_to_string(p) << "\", rank_level=" << rank;
    if (g.highlight && desc_of_perm(p) == *g.highlight) out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (const auto& [rank, ids] : layers) {
    out << "  { rank=same;";
    for (auto i : ids) out << " \"" << name(g.vertices[i]) << "\";";
    out << " }\n";
  }
  for (const auto& [hi, lo] : g.edges)
    out << "  \"" << name(g.vertices[lo]) << "\" -> \"" << name(g.vertices[hi]) << "\";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Maps

// psi(sigma) = R_{comp(desc sigma)} for lsd sigma, else 0.
inline NsymmElem psi_retract(const Perm& s) {
  if (!is_lsd(s)) return {NBasis::R, {}};
  return nsymm(NBasis::R, comp_of_desc(desc_of_perm(s)));
}

inline NsymmElem psi_of(const Elem<Perm>& x) {
  NsymmElem out{NBasis::R, {}};
  for (const auto& [s, c] : x) out.terms.add_scaled(psi_retract(s).terms, c);
  return out;
}

// psi with values in the Z basis, as a map of basis keys.
inline Elem<Word> psi_z(const Perm& s) { return to_basis(psi_retract(s), NBasis::Z).terms; }

inline Perm section_lsd(const Word& a) { return lsd(desc_of_comp(a)); }
inline Perm section_lld(const Word& a) { return lld(desc_of_comp(a)); }

// A section F_a -> perm(a) read on the monomial basis: M_a = sum of signed F's.
template <class Section>
Elem<Perm> section_on_monomial(Section&& f, const Word& a) {
  Elem<Perm> out;
  for (const auto& [b, c] : m_to_f(a)) out.add_term(f(b), c);
  return out;
}

// The two lsd witnesses in m'(sigma (x) tau) for lsd sigma (length m) and tau
// (length n), both nonempty. sigma ends in the run m, m-1, ..., r and tau
// starts with the run s, s-1, ..., 1.
inline std::pair<Perm, Perm> lsd_witnesses(const Perm& sigma, const Perm& tau) {
  const auto m = static_cast<Letter>(sigma.size());
  std::size_t r = sigma.size();
  while (r > 1 && sigma[r - 2] > sigma[r - 1]) --r;  // 1-based start of the last run
  std::size_t s = 1;
  while (s < tau.size() && tau[s - 1] > tau[s]) ++s;
  std::vector<Letter> w1, w2;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    w1.push_back(sigma[i]);
    w2.push_back(sigma[i]);
  }
  for (std::size_t i = r - 1; i < sigma.size(); ++i) w1.push_back(sigma[i]);
  for (std::size_t i = 0; i < s; ++i) w1.push_back(m + tau[i]);
  for (Letter v = m + static_cast<Letter>(s); v >= static_cast<Letter>(r); --v) w2.push_back(v);
  for (std::size_t i = s; i < tau.size(); ++i) {
    w1.push_back(m + tau[i]);
    w2.push_back(m + tau[i]);
  }
  return {Perm(Word(std::move(w1))), Perm(Word(std::move(w2)))};
}

// ---------------------------------------------------------------------------
// Checks

// Each descent class of S_n is connected in the Hasse diagram, with unique
// weak-order minimum lsd(D) and maximum lld(D), both matching the
// lexicographic oracles.
inline Report check_descent_class_theorem(int n) {
  Recorder rec("descent-theorem", "S_" + std::to_string(n), n);
  std::map<DescentSet, std::vector<Perm>> classes;
  for (const auto& s : permutations(n)) classes[desc_of_perm(s)].push_back(s);
  for (const auto& [D, members] : classes) {
    const std::string in = "D=" + to_string(D);
    std::set<Perm> inside(members.begin(), members.end());
    // connectivity through cover edges in either direction
    std::map<Perm, std::vector<Perm>> adj;
    for (const auto& s : members)
      for (const auto& t : covers(s))
        if (inside.count(t)) {
          adj[s].push_back(t);
          adj[t].push_back(s);
        }
    std::set<Perm> reached{members.front()};
    std::queue<Perm> todo;
    todo.push(members.front());
    while (!todo.empty()) {
      Perm x = todo.front();
      todo.pop();
      for (const auto& y : adj[x])
        if (reached.insert(y).second) todo.push(y);
    }
    if (!rec.holds("connected", in, reached.size() == members.size(),
                   std::to_string(reached.size()) + " of " + std::to_string(members.size()) + " reached"))
      return rec.take();

    std::vector<InvSet> inv;
    for (const auto& s : members) inv.push_back(inversions(s));
    std::vector<Perm> minima, maxima;
    for (std::size_t i = 0; i < members.size(); ++i) {
      bool below_all = true, above_all = true;
      for (std::size_t j = 0; j < members.size(); ++j) {
        below_all = below_all && std::includes(inv[j].begin(), inv[j].end(), inv[i].begin(), inv[i].end());
        above_all = above_all && std::includes(inv[i].begin(), inv[i].end(), inv[j].begin(), inv[j].end());
      }
      if (below_all) minima.push_back(members[i]);
      if (above_all) maxima.push_back(members[i]);
    }
    if (!rec.holds("unique-minimum", in, minima.size() == 1, std::to_string(minima.size()) + " minima"))
      return rec.take();
    if (!rec.holds("unique-maximum", in, maxima.size() == 1, std::to_string(maxima.size()) + " maxima"))
      return rec.take();
    if (!rec.equal("minimum-is-lsd", in, Elem<Perm>(minima[0]), Elem<Perm>(lsd(D)))) return rec.take();
    if (!rec.equal("lsd-is-lex-min", in, Elem<Perm>(lsd(D)), Elem<Perm>(members.front()))) return rec.take();
    if (!rec.equal("maximum-is-lld", in, Elem<Perm>(maxima[0]), Elem<Perm>(lld(D)))) return rec.take();
    if (!rec.equal("lld-is-lex-max", in, Elem<Perm>(lld(D)), Elem<Perm>(members.back()))) return rec.take();
  }
  return rec.take();
}

// lex-min in class <=> gasc = asc, and lex-max in class <=> gdesc = desc.
inline Report check_global_characterization(int n) {
  Recorder rec("global-ascents", "S_" + std::to_string(n), n);
  std::map<DescentSet, std::pair<Perm, Perm>> extremes;
  for (const auto& s : permutations(n)) {
    auto D = desc_of_perm(s);
    auto it = extremes.find(D);
    if (it == extremes.end())
      extremes.emplace(D, std::make_pair(s, s));
    else
      it->second.second = s;
  }
  for (const auto& s : permutations(n)) {
    const auto& [lo, hi] = extremes.at(desc_of_perm(s));
    std::string in = "sigma=" + key_to_string(s);
    if (!rec.holds("lsd-iff-gasc", in, (s == lo) == (gasc(s) == asc(s)))) return rec.take();
    if (!rec.holds("lld-iff-closed", in, (s == hi) == (gdesc(s) == desc(s)))) return rec.take();
  }
  return rec.take();
}

// Non-lsd permutations span an ideal of (MPR, m').
inline Report check_nonlsd_ideal(int max_total) {
  Recorder rec("nonlsd-ideal", "mpr2", max_total);
  for (const auto& a : permutations_up_to(max_total))
    for (const auto& b : permutations_up_to(max_total - static_cast<int>(a.size()))) {
      if (is_lsd(a) && is_lsd(b)) continue;
      for (const auto& [t, c] : mpr_mul2(a, b))
        if (!rec.holds("ideal", "a=" + key_to_string(a) + ", b=" + key_to_string(b), !is_lsd(t), key_to_string(t)))
          return rec.take();
    }
  return rec.take();
}

// Both halves of every cut of an lsd (resp. lld) permutation standardize to
// lsd (resp. lld) permutations.
inline Report check_cut_closure(int max_n) {
  Recorder rec("cut-closure", "mpr", max_n);
  for (const auto& s : permutations_up_to(max_n)) {
    bool l = is_lsd(s), h = is_lld(s);
    if (!l && !h) continue;
    for (const auto& [t, c] : mpr_comul(s)) {
      std::string in = "sigma=" + key_to_string(s);
      if (l && !rec.holds("lsd", in, is_lsd(t.first) && is_lsd(t.second), key_to_string(t))) return rec.take();
      if (h && !rec.holds("lld", in, is_lld(t.first) && is_lld(t.second), key_to_string(t))) return rec.take();
    }
  }
  return rec.take();
}

// The explicit witnesses are lsd with descent sets D1, D2 and occur in
// m'(sigma (x) tau).
inline Report check_lsd_witnesses(int max_n) {
  Recorder rec("lsd-witnesses", "mpr2", max_n);
  for (const auto& a : permutations_up_to(max_n))
    for (const auto& b : permutations_up_to(max_n)) {
      if (a.empty() || b.empty() || !is_lsd(a) || !is_lsd(b)) continue;
      const int m = static_cast<int>(a.size());
      auto [r1, r2] = lsd_witnesses(a, b);
      std::set<int> d1 = desc(a);
      for (int x : desc(b)) d1.insert(m + x);
      std::set<int> d2 = d1;
      d2.insert(m);
      const int total = m + static_cast<int>(b.size());
      Elem<Perm> prod = mpr_mul2(a, b);
      std::string in = "sigma=" + key_to_string(a) + ", tau=" + key_to_string(b);
      if (!rec.equal("rho1", in, Elem<Perm>(r1), Elem<Perm>(lsd(DescentSet(total, d1))))) return rec.take();
      if (!rec.equal("rho2", in, Elem<Perm>(r2), Elem<Perm>(lsd(DescentSet(total, d2))))) return rec.take();
      if (!rec.holds("rho1-summand", in, prod.coeff(r1) == 1, key_to_string(r1))) return rec.take();
      if (!rec.holds("rho2-summand", in, prod.coeff(r2) == 1, key_to_string(r2))) return rec.take();
    }
  return rec.take();
}

}  // namespace wordhopf

#endif  // WORDHOPF_DESCENT_HPP
