#ifndef WORDHOPF_FORMAT_HPP
#define WORDHOPF_FORMAT_HPP

// Text and JSON rendering of keys and linear combinations, and a small
// recursive-descent parser for the literal syntax
//
//   word          [1,2,3]   []
//   substitution  ([1,2,1] | [2,1])
//   element       2[1,1,2] + [1,2,1] - [3]      0
//   tensor term   2[1] ⊗ [1,3]
//
// Printing and parsing are inverse: every printed element re-parses equal.

#include <cctype>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include "wordhopf/freemod.hpp"
#include "wordhopf/word.hpp"

namespace wordhopf {

inline constexpr std::string_view kTensorSign = "⊗";

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// ---------------------------------------------------------------------------
// Keys to text

inline std::string key_to_string(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

inline std::string key_to_string(const Perm& p) { return key_to_string(p.word()); }

template <class A, class B>
std::string key_to_string(const std::pair<A, B>& k) {
  return key_to_string(k.first) + " " + std::string(kTensorSign) + " " + key_to_string(k.second);
}

template <class A, class B, class C>
std::string key_to_string(const std::tuple<A, B, C>& k) {
  const std::string t = " " + std::string(kTensorSign) + " ";
  return key_to_string(std::get<0>(k)) + t + key_to_string(std::get<1>(k)) + t + key_to_string(std::get<2>(k));
}

template <class Key>
std::string to_string(const LinComb<Key>& x) {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : x) {
    Coeff mag = c < 0 ? -c : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1) s += std::to_string(mag);
    s += key_to_string(k);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Keys to JSON

inline nlohmann::json key_to_json(const Word& w) { return nlohmann::json(w.letters()); }
inline nlohmann::json key_to_json(const Perm& p) { return key_to_json(p.word()); }

template <class A, class B>
nlohmann::json key_to_json(const std::pair<A, B>& k) {
  return nlohmann::json::array({key_to_json(k.first), key_to_json(k.second)});
}

template <class A, class B, class C>
nlohmann::json key_to_json(const std::tuple<A, B, C>& k) {
  return nlohmann::json::array(
      {key_to_json(std::get<0>(k)), key_to_json(std::get<1>(k)), key_to_json(std::get<2>(k))});
}

template <class Key>
nlohmann::json to_json(const LinComb<Key>& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : x) terms.push_back({{"coeff", c}, {"key", key_to_json(k)}});
  return {{"terms", terms}};
}

// ---------------------------------------------------------------------------
// Parsing

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }
  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 18) fail("integer too large");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Word parse_word(Cursor& in) {
  in.expect("[");
  Word w;
  if (in.accept("]")) return w;
  do {
    std::size_t at = in.position();
    long long a = in.integer();
    if (a < 1 || a > 1'000'000'000) throw ParseError("letters must be positive integers", at);
    w.push_back(static_cast<Letter>(a));
  } while (in.accept(","));
  in.expect("]");
  return w;
}

inline Perm parse_perm(Cursor& in) {
  std::size_t at = in.position();
  Word w = parse_word(in);
  if (!is_permutation_word(w)) throw ParseError("not a permutation word", at);
  return Perm(std::move(w));
}

// Parses a whole string with a single-key parser, requiring full consumption.
template <class F>
auto parse_all(std::string_view text, F&& key) {
  Cursor in(text);
  auto k = key(in);
  if (!in.at_end()) in.fail("trailing input");
  return k;
}

inline Word parse_word(std::string_view text) {
  return parse_all(text, [](Cursor& c) { return parse_word(c); });
}

inline Perm parse_perm(std::string_view text) {
  return parse_all(text, [](Cursor& c) { return parse_perm(c); });
}

// Parses an element "c1 k1 + c2 k2 - ...", or "0", with a key parser.
template <class KeyParser>
auto parse_elem(std::string_view text, KeyParser&& key) {
  using Key = std::decay_t<decltype(key(std::declval<Cursor&>()))>;
  Cursor in(text);
  LinComb<Key> out;
  if (in.accept("0") && in.at_end()) return out;
  in = Cursor(text);
  bool first = true;
  while (!in.at_end()) {
    Coeff sign = 1;
    if (in.accept("-"))
      sign = -1;
    else if (!in.accept("+") && !first)
      in.fail("expected '+' or '-'");
    Coeff c = 1;
    if (in.peek_digit()) c = in.integer();
    out.add_term(key(in), checked_mul(sign, c));
    first = false;
  }
  if (first) in.fail("empty element");
  return out;
}

template <class KeyParser>
auto tensor_parser(KeyParser key) {
  return [key](Cursor& in) {
    auto a = key(in);
    in.expect(kTensorSign);
    auto b = key(in);
    return std::make_pair(std::move(a), std::move(b));
  };
}

}  // namespace wordhopf

#endif  // WORDHOPF_FORMAT_HPP
