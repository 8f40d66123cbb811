#ifndef WORDHOPF_FREEMOD_HPP
#define WORDHOPF_FREEMOD_HPP

// Sparse integer linear combinations over an ordered basis.
//
// A LinComb<Key> is a finite formal sum  c_1 k_1 + ... + c_r k_r  with
// nonzero integer coefficients. Terms are kept in a std::map so iteration
// follows the basis order of Key (operator<=>), which makes all printed
// output deterministic. Tensors are linear combinations over std::pair /
// std::tuple keys, so the same machinery serves H, H (x) H and H (x) H (x) H.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace wordhopf {

using Coeff = std::int64_t;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

template <class Key>
class LinComb {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Coeff>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& k, Coeff c = 1) { add_term(k, c); }
  LinComb(std::initializer_list<std::pair<Key, Coeff>> terms) {
    for (const auto& [k, c] : terms) add_term(k, c);
  }

  // Adds c*k, dropping the entry if it cancels.
  LinComb& add_term(const Key& k, Coeff c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  LinComb& add_term(Key&& k, Coeff c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  LinComb& add_scaled(const LinComb& other, Coeff n) {
    if (n == 0) return *this;
    for (const auto& [k, c] : other.terms_) add_term(k, checked_mul(n, c));
    return *this;
  }

  LinComb& operator+=(const LinComb& other) { return add_scaled(other, 1); }
  LinComb& operator-=(const LinComb& other) { return add_scaled(other, -1); }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(const LinComb& a) { return LinComb{}.add_scaled(a, -1); }
  friend LinComb operator*(Coeff n, const LinComb& a) { return LinComb{}.add_scaled(a, n); }

  Coeff coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  // Sum of all coefficients.
  Coeff mass() const {
    Coeff s = 0;
    for (const auto& [k, c] : terms_) s = checked_add(s, c);
    return s;
  }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  map_type terms_;
};

template <class Key>
using Elem = LinComb<Key>;

template <class A, class B = A>
using Tensor = LinComb<std::pair<A, B>>;

template <class A, class B = A, class C = B>
using Tensor3 = LinComb<std::tuple<A, B, C>>;

template <class Key>
LinComb<Key> scale(Coeff n, const LinComb<Key>& a) {
  return n * a;
}

// Linear extension of a basis-level map f : Key -> LinComb<Out>.
template <class Key, class F>
auto linear_extend(F&& f, const LinComb<Key>& a) {
  using Out = std::decay_t<decltype(f(std::declval<const Key&>()))>;
  Out result;
  for (const auto& [k, c] : a) result.add_scaled(f(k), c);
  return result;
}

// Bilinear extension of f : KeyA x KeyB -> LinComb<Out>.
template <class KeyA, class KeyB, class F>
auto bilinear_extend(F&& f, const LinComb<KeyA>& a, const LinComb<KeyB>& b) {
  using Out = std::decay_t<decltype(f(std::declval<const KeyA&>(), std::declval<const KeyB&>()))>;
  Out result;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) result.add_scaled(f(ka, kb), checked_mul(ca, cb));
  return result;
}

// a (x) b for plain elements.
template <class A, class B>
Tensor<A, B> tensor(const LinComb<A>& a, const LinComb<B>& b) {
  Tensor<A, B> t;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) t.add_term({ka, kb}, checked_mul(ca, cb));
  return t;
}

// (f (x) g)(t) for basis-level maps f, g.
template <class A, class B, class F, class G>
auto tensor_map(F&& f, G&& g, const Tensor<A, B>& t) {
  using OA = typename std::decay_t<decltype(f(std::declval<const A&>()))>::key_type;
  using OB = typename std::decay_t<decltype(g(std::declval<const B&>()))>::key_type;
  Tensor<OA, OB> result;
  for (const auto& [k, c] : t) result.add_scaled(tensor(f(k.first), g(k.second)), c);
  return result;
}

}  // namespace wordhopf

#endif  // WORDHOPF_FREEMOD_HPP
