#ifndef WORDHOPF_WORD_HPP
#define WORDHOPF_WORD_HPP

// Words over N = {1,2,...} and their combinatorics: statistics, shuffles,
// cuts, subwords and the two standardizations.

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wordhopf/freemod.hpp"

namespace wordhopf {

using Letter = int;

class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) { validate(); }
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { validate(); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter a) {
    if (a < 1) throw std::invalid_argument("letters must be positive integers");
    letters_.push_back(a);
  }
  void reserve(std::size_t n) { letters_.reserve(n); }

  // Subrange [from, to) as a word.
  Word slice(std::size_t from, std::size_t to) const {
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                      letters_.begin() + static_cast<std::ptrdiff_t>(to));
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;

  // Basis order: shorter words first, then lexicographic.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }

 private:
  void validate() const {
    for (Letter a : letters_)
      if (a < 1) throw std::invalid_argument("letters must be positive integers");
  }

  std::vector<Letter> letters_;
};

inline Word concat(const Word& a, const Word& b) {
  std::vector<Letter> v(a.letters());
  v.insert(v.end(), b.begin(), b.end());
  return Word(std::move(v));
}

// [a1 + k, ..., am + k]
inline Word shift(const Word& a, Letter k) {
  std::vector<Letter> v(a.letters());
  for (auto& x : v) x += k;
  return Word(std::move(v));
}

// ---------------------------------------------------------------------------
// Statistics

using Multiset = std::map<Letter, int>;

inline std::size_t length(const Word& a) { return a.size(); }

inline long weight(const Word& a) {
  return std::accumulate(a.begin(), a.end(), 0L);
}

inline Letter height(const Word& a) {
  return a.empty() ? 0 : *std::max_element(a.begin(), a.end());
}

inline std::set<Letter> support(const Word& a) { return {a.begin(), a.end()}; }

inline Multiset multisupport(const Word& a) {
  Multiset m;
  for (Letter x : a) ++m[x];
  return m;
}

// Number of distinct letters.
inline std::size_t content(const Word& a) { return support(a).size(); }

struct WordStats {
  std::size_t length;
  long weight;
  Letter height;
  std::set<Letter> support;
  Multiset multisupport;
};

inline WordStats stats(const Word& a) {
  return {length(a), weight(a), height(a), support(a), multisupport(a)};
}

inline bool is_injective(const Word& a) { return content(a) == a.size(); }

inline bool is_surjective(const Word& a) {
  return static_cast<std::size_t>(height(a)) == content(a);
}

inline bool is_permutation_word(const Word& a) {
  return is_injective(a) && static_cast<std::size_t>(height(a)) == a.size();
}

// ---------------------------------------------------------------------------
// Permutation words

class Perm {
 public:
  Perm() = default;
  explicit Perm(Word w) : word_(std::move(w)) {
    if (!is_permutation_word(word_))
      throw std::invalid_argument("not a permutation word");
  }
  Perm(std::initializer_list<Letter> letters) : Perm(Word(letters)) {}

  static Perm identity(int n) {
    std::vector<Letter> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(Word(std::move(v)));
  }

  const Word& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  Letter operator[](std::size_t i) const { return word_[i]; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.word_ <=> b.word_;
  }

 private:
  Word word_;
};

// ---------------------------------------------------------------------------
// Products of words

namespace detail {

inline void shuffle_rec(const Word& a, std::size_t i, const Word& b, std::size_t j,
                        std::vector<Letter>& buf, Elem<Word>& out) {
  if (i == a.size() && j == b.size()) {
    out.add_term(Word(buf), 1);
    return;
  }
  if (i < a.size()) {
    buf.push_back(a[i]);
    shuffle_rec(a, i + 1, b, j, buf, out);
    buf.pop_back();
  }
  if (j < b.size()) {
    buf.push_back(b[j]);
    shuffle_rec(a, i, b, j + 1, buf, out);
    buf.pop_back();
  }
}

inline void osh_rec(const Word& a, std::size_t i, const Word& b, std::size_t j,
                    std::vector<Letter>& buf, Elem<Word>& out) {
  if (i == a.size() && j == b.size()) {
    out.add_term(Word(buf), 1);
    return;
  }
  if (i < a.size()) {
    buf.push_back(a[i]);
    osh_rec(a, i + 1, b, j, buf, out);
    buf.pop_back();
  }
  if (j < b.size()) {
    buf.push_back(b[j]);
    osh_rec(a, i, b, j + 1, buf, out);
    buf.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    buf.push_back(a[i] + b[j]);
    osh_rec(a, i + 1, b, j + 1, buf, out);
    buf.pop_back();
  }
}

}  // namespace detail

// Sum over all interleavings, with multiplicity.
inline Elem<Word> shuffle(const Word& a, const Word& b) {
  Elem<Word> out;
  std::vector<Letter> buf;
  buf.reserve(a.size() + b.size());
  detail::shuffle_rec(a, 0, b, 0, buf, out);
  return out;
}

// Quasi-shuffle: interleavings in which a letter of a may collide with a
// letter of b, collided letters being added.
inline Elem<Word> overlapping_shuffle(const Word& a, const Word& b) {
  Elem<Word> out;
  std::vector<Letter> buf;
  buf.reserve(a.size() + b.size());
  detail::osh_rec(a, 0, b, 0, buf, out);
  return out;
}

// ---------------------------------------------------------------------------
// Cuts and subwords

using WordPair = std::pair<Word, Word>;

// (prefix, suffix) by increasing prefix length.
inline std::vector<WordPair> cuts(const Word& a) {
  std::vector<WordPair> out;
  out.reserve(a.size() + 1);
  for (std::size_t i = 0; i <= a.size(); ++i) out.emplace_back(a.slice(0, i), a.slice(i, a.size()));
  return out;
}

inline bool disjoint_supports(const Word& a, const Word& b) {
  auto sa = support(a);
  return std::none_of(b.begin(), b.end(), [&](Letter x) { return sa.count(x) != 0; });
}

// Cuts whose two halves share no letter.
inline std::vector<WordPair> good_cuts(const Word& a) {
  std::vector<WordPair> out;
  for (auto& c : cuts(a))
    if (disjoint_supports(c.first, c.second)) out.push_back(std::move(c));
  return out;
}

// All 2^lg(a) (subword, complement) pairs; subset i has bit j set when
// position j belongs to the subword.
inline std::vector<WordPair> subwords_with_complement(const Word& a) {
  if (a.size() >= 8 * sizeof(unsigned long) - 1) throw std::length_error("word too long for subword enumeration");
  std::vector<WordPair> out;
  const unsigned long total = 1UL << a.size();
  out.reserve(total);
  for (unsigned long mask = 0; mask < total; ++mask) {
    Word sub, rest;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (mask & (1UL << j))
        sub.push_back(a[j]);
      else
        rest.push_back(a[j]);
    }
    out.emplace_back(std::move(sub), std::move(rest));
  }
  return out;
}

// The maximal subword of a whose letters lie in `letters`.
inline Word restrict_to(const Word& a, const std::set<Letter>& letters) {
  Word w;
  for (Letter x : a)
    if (letters.count(x)) w.push_back(x);
  return w;
}

// ---------------------------------------------------------------------------
// Standardizations

// Schensted standardization: equal letters are numbered left to right.
inline Perm standardize(const Word& a) {
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return a[i] < a[j]; });
  std::vector<Letter> v(a.size());
  for (std::size_t r = 0; r < idx.size(); ++r) v[idx[r]] = static_cast<Letter>(r + 1);
  return Perm(Word(std::move(v)));
}

// Monotone relabel supp(a) -> {1..ct(a)}.
inline Word surjective_standardize(const Word& a) {
  std::vector<Letter> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Letter> v;
  v.reserve(a.size());
  for (Letter x : a)
    v.push_back(static_cast<Letter>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin() + 1));
  return Word(std::move(v));
}

// ---------------------------------------------------------------------------
// Enumeration

// Compositions of n in basis order.
inline std::vector<Word> compositions(int n) {
  std::vector<Word> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // bit j of mask set: a part ends after position j+1
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    Word w;
    int part = 1;
    for (int j = 0; j < n - 1; ++j) {
      if (mask & (1UL << j)) {
        w.push_back(part);
        part = 1;
      } else {
        ++part;
      }
    }
    w.push_back(part);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All words of weight <= n.
inline std::vector<Word> words_up_to_weight(int n) {
  std::vector<Word> out;
  for (int k = 0; k <= n; ++k) {
    auto c = compositions(k);
    out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All words of length <= max_len with letters in {1..max_letter}.
inline std::vector<Word> words_bounded(int max_len, int max_letter) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter a = 1; a <= max_letter; ++a) {
        Word v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All words of exact length len over {1..max_letter}.
inline std::vector<Word> words_of_length(int len, int max_letter) {
  std::vector<Word> out;
  for (auto& w : words_bounded(len, max_letter))
    if (static_cast<int>(w.size()) == len) out.push_back(std::move(w));
  return out;
}

// S_n in lexicographic order.
inline std::vector<Perm> permutations(int n) {
  std::vector<Letter> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(Word(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// All permutations of degree <= n.
inline std::vector<Perm> permutations_up_to(int n) {
  std::vector<Perm> out;
  for (int k = 0; k <= n; ++k) {
    auto p = permutations(k);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

}  // namespace wordhopf

#endif  // WORDHOPF_WORD_HPP
