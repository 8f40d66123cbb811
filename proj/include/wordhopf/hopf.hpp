#ifndef WORDHOPF_HOPF_HPP
#define WORDHOPF_HOPF_HPP

// Algebra-agnostic Hopf machinery: the HopfDef bundle, pairings, the generic
// antipode of a connected graded bialgebra, and exhaustive-at-bound checkers
// for the bialgebra, antipode, duality and morphism axioms.

#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "wordhopf/format.hpp"
#include "wordhopf/freemod.hpp"

namespace wordhopf {

template <class Key>
struct HopfDef {
  std::string name;
  Key unit{};
  std::function<int(const Key&)> degree;
  // Measure used to bound test ranges; defaults to degree. Algebras whose
  // homogeneous pieces have infinite rank enumerate by a finite measure.
  std::function<int(const Key&)> size;
  // All keys of size <= bound in basis order. Empty when no finite
  // enumeration exists without an explicit cap.
  std::function<std::vector<Key>(int)> enumerate;
  // Empty for a coalgebra without product.
  std::function<Elem<Key>(const Key&, const Key&)> product;
  std::function<Tensor<Key>(const Key&)> coproduct;

  int measure(const Key& k) const { return size ? size(k) : degree(k); }
  Coeff counit(const Key& k) const { return k == unit ? 1 : 0; }
  bool has_product() const { return static_cast<bool>(product); }

  Elem<Key> mul(const Elem<Key>& a, const Elem<Key>& b) const {
    return bilinear_extend(product, a, b);
  }
  Tensor<Key> comul(const Elem<Key>& a) const { return linear_extend(coproduct, a); }
  Coeff counit(const Elem<Key>& a) const {
    Coeff s = 0;
    for (const auto& [k, c] : a) s = checked_add(s, checked_mul(c, counit(k)));
    return s;
  }
};

template <class Key>
std::vector<Key> enumerate_basis(const HopfDef<Key>& h, int bound) {
  if (!h.enumerate)
    throw std::invalid_argument(h.name + " has infinite-rank homogeneous components; construct it with an explicit size cap");
  return h.enumerate(bound);
}

// ---------------------------------------------------------------------------
// Pairings

template <class KA, class KB>
using Pairing = std::function<Coeff(const KA&, const KB&)>;

template <class KA, class KB>
Coeff pair(const Pairing<KA, KB>& p, const Elem<KA>& a, const Elem<KB>& b) {
  Coeff s = 0;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Coeff v = p(ka, kb);
      if (v) s = checked_add(s, checked_mul(checked_mul(ca, cb), v));
    }
  return s;
}

template <class KA, class KB>
Coeff pair(const Pairing<KA, KB>& p, const Tensor<KA>& a, const Tensor<KB>& b) {
  Coeff s = 0;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Coeff v = p(ka.first, kb.first);
      if (!v) continue;
      v = checked_mul(v, p(ka.second, kb.second));
      if (v) s = checked_add(s, checked_mul(checked_mul(ca, cb), v));
    }
  return s;
}

template <class Key>
Pairing<Key, Key> kronecker_pairing() {
  return [](const Key& a, const Key& b) -> Coeff { return a == b ? 1 : 0; };
}

// ---------------------------------------------------------------------------
// Antipode
//
// For a connected graded bialgebra, m(S (x) id)mu = e.eps forces
//   S(1) = 1,   S(x) = - sum_{x' (x) x'' in mu(x), deg x'' > 0} S(x') x''
// and every x' in that sum has strictly smaller degree.

template <class Key>
class Antipode {
 public:
  explicit Antipode(const HopfDef<Key>& h) : h_(h) {}

  const Elem<Key>& operator()(const Key& k) {
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Elem<Key> result;
    if (h_.degree(k) == 0) {
      result.add_term(h_.unit, h_.counit(k));
    } else {
      for (const auto& [t, c] : h_.coproduct(k)) {
        if (h_.degree(t.second) == 0) continue;
        Elem<Key> left = (*this)(t.first);
        result.add_scaled(h_.mul(left, Elem<Key>(t.second)), checked_mul(-1, c));
      }
    }
    return memo_.emplace(k, std::move(result)).first->second;
  }

  Elem<Key> operator()(const Elem<Key>& x) {
    Elem<Key> out;
    for (const auto& [k, c] : x) out.add_scaled((*this)(k), c);
    return out;
  }

 private:
  const HopfDef<Key>& h_;
  std::map<Key, Elem<Key>> memo_;
};

template <class Key>
Elem<Key> antipode(const HopfDef<Key>& h, const Elem<Key>& x) {
  Antipode<Key> s(h);
  return s(x);
}

// ---------------------------------------------------------------------------
// Reports

struct Counterexample {
  std::string property;
  std::string input;
  std::string lhs;
  std::string rhs;
  std::string difference;
};

struct Report {
  std::string suite;
  std::string subject;
  int bound = 0;
  std::size_t cases = 0;
  std::optional<Counterexample> failure;

  bool passed() const { return !failure.has_value(); }

  std::string to_text() const {
    std::string s = std::string(passed() ? "PASS " : "FAIL ") + suite + "[" + subject + "] bound=" +
                    std::to_string(bound) + " cases=" + std::to_string(cases);
    if (failure) {
      s += "\n  property:   " + failure->property;
      s += "\n  input:      " + failure->input;
      s += "\n  lhs:        " + failure->lhs;
      s += "\n  rhs:        " + failure->rhs;
      if (!failure->difference.empty()) s += "\n  difference: " + failure->difference;
    }
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"suite", suite}, {"subject", subject}, {"bound", bound},
                        {"cases", cases}, {"passed", passed()}};
    if (failure)
      j["failure"] = {{"property", failure->property}, {"input", failure->input}, {"lhs", failure->lhs},
                      {"rhs", failure->rhs}, {"difference", failure->difference}};
    else
      j["failure"] = nullptr;
    return j;
  }
};

// Collects comparisons until the first mismatch.
class Recorder {
 public:
  Recorder(std::string suite, std::string subject, int bound) {
    report_.suite = std::move(suite);
    report_.subject = std::move(subject);
    report_.bound = bound;
  }

  bool failed() const { return report_.failure.has_value(); }

  template <class T>
  bool equal(const std::string& property, const std::string& input, const T& lhs, const T& rhs) {
    ++report_.cases;
    if (lhs == rhs) return true;
    if constexpr (std::is_same_v<T, std::string>) {
      report_.failure = Counterexample{property, input, lhs, rhs, ""};
    } else if constexpr (requires { lhs - rhs; to_string(lhs); }) {
      report_.failure = Counterexample{property, input, to_string(lhs), to_string(rhs), to_string(lhs - rhs)};
    } else if constexpr (requires { key_to_string(lhs); }) {
      report_.failure = Counterexample{property, input, key_to_string(lhs), key_to_string(rhs), "keys differ"};
    } else {
      report_.failure = Counterexample{property, input, std::to_string(lhs), std::to_string(rhs),
                                       std::to_string(lhs - rhs)};
    }
    return false;
  }

  bool holds(const std::string& property, const std::string& input, bool ok, const std::string& detail = "") {
    ++report_.cases;
    if (ok) return true;
    report_.failure = Counterexample{property, input, detail, "", ""};
    return false;
  }

  Report take() { return std::move(report_); }

 private:
  Report report_;
};

// ---------------------------------------------------------------------------
// Checkers

namespace detail {

template <class Key>
class Cached {
 public:
  explicit Cached(const HopfDef<Key>& h) : h_(h) {}

  const Elem<Key>& mul(const Key& a, const Key& b) {
    auto k = std::make_pair(a, b);
    if (auto it = mul_.find(k); it != mul_.end()) return it->second;
    return mul_.emplace(std::move(k), h_.product(a, b)).first->second;
  }
  Elem<Key> mul(const Elem<Key>& a, const Elem<Key>& b) {
    Elem<Key> out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) out.add_scaled(mul(ka, kb), checked_mul(ca, cb));
    return out;
  }
  const Tensor<Key>& comul(const Key& a) {
    if (auto it = comul_.find(a); it != comul_.end()) return it->second;
    return comul_.emplace(a, h_.coproduct(a)).first->second;
  }
  Tensor<Key> comul(const Elem<Key>& a) {
    Tensor<Key> out;
    for (const auto& [k, c] : a) out.add_scaled(comul(k), c);
    return out;
  }

 private:
  const HopfDef<Key>& h_;
  std::map<std::pair<Key, Key>, Elem<Key>> mul_;
  std::map<Key, Tensor<Key>> comul_;
};

template <class Key>
std::vector<Key> keys_within(const HopfDef<Key>& h, int bound) {
  std::vector<Key> out;
  for (auto& k : enumerate_basis(h, bound))
    if (h.measure(k) <= bound) out.push_back(std::move(k));
  return out;
}

}  // namespace detail

// Associativity, unitality, coassociativity, counitality, degree
// compatibility and the Hopf property on all keys (pairs, triples) whose
// total size is within the bound. Coalgebras without product get only the
// coalgebra axioms.
template <class Key>
Report check_bialgebra(const HopfDef<Key>& h, int bound) {
  Recorder rec("bialgebra", h.name, bound);
  const auto keys = detail::keys_within(h, bound);
  detail::Cached<Key> c(h);
  const Elem<Key> one(h.unit);

  for (const auto& x : keys) {
    std::string in = "x=" + key_to_string(x);
    if (!rec.equal("counit", in, h.counit(x), h.degree(x) == 0 ? Coeff{1} : Coeff{0})) return rec.take();
    if (h.degree(x) == 0 && !rec.holds("connectedness", in, x == h.unit, "degree-0 key other than the unit"))
      return rec.take();

    const auto& mu = c.comul(x);
    for (const auto& [t, coef] : mu) {
      if (!rec.holds("coproduct-degree", in, h.degree(t.first) + h.degree(t.second) == h.degree(x),
                     key_to_string(t)))
        return rec.take();
    }
    Elem<Key> left, right;
    for (const auto& [t, coef] : mu) {
      left.add_scaled(Elem<Key>(t.second), checked_mul(coef, h.counit(t.first)));
      right.add_scaled(Elem<Key>(t.first), checked_mul(coef, h.counit(t.second)));
    }
    if (!rec.equal("counit-left", in, left, Elem<Key>(x))) return rec.take();
    if (!rec.equal("counit-right", in, right, Elem<Key>(x))) return rec.take();

    Tensor3<Key> lhs, rhs;
    for (const auto& [t, coef] : mu) {
      for (const auto& [u, d] : c.comul(t.first))
        lhs.add_term({u.first, u.second, t.second}, checked_mul(coef, d));
      for (const auto& [u, d] : c.comul(t.second))
        rhs.add_term({t.first, u.first, u.second}, checked_mul(coef, d));
    }
    if (!rec.equal("coassociativity", in, lhs, rhs)) return rec.take();

    if (h.has_product()) {
      if (!rec.equal("unit-left", in, c.mul(h.unit, x), Elem<Key>(x))) return rec.take();
      if (!rec.equal("unit-right", in, c.mul(x, h.unit), Elem<Key>(x))) return rec.take();
    }
  }
  if (h.has_product() &&
      !rec.equal("unit-coproduct", "unit", c.comul(h.unit), Tensor<Key>({h.unit, h.unit})))
    return rec.take();
  if (!h.has_product()) return rec.take();

  for (const auto& x : keys)
    for (const auto& y : keys) {
      if (h.measure(x) + h.measure(y) > bound) continue;
      std::string in = "x=" + key_to_string(x) + ", y=" + key_to_string(y);
      const auto& xy = c.mul(x, y);
      for (const auto& [k, coef] : xy)
        if (!rec.holds("product-degree", in, h.degree(k) == h.degree(x) + h.degree(y), key_to_string(k)))
          return rec.take();

      Tensor<Key> lhs = c.comul(xy);
      Tensor<Key> rhs;
      for (const auto& [tx, cx] : c.comul(x))
        for (const auto& [ty, cy] : c.comul(y)) {
          Coeff cc = checked_mul(cx, cy);
          rhs.add_scaled(tensor(c.mul(tx.first, ty.first), c.mul(tx.second, ty.second)), cc);
        }
      if (!rec.equal("hopf-compatibility", in, lhs, rhs)) return rec.take();

      for (const auto& z : keys) {
        if (h.measure(x) + h.measure(y) + h.measure(z) > bound) continue;
        Elem<Key> l = c.mul(xy, Elem<Key>(z));
        Elem<Key> r = c.mul(Elem<Key>(x), c.mul(y, z));
        if (!rec.equal("associativity", in + ", z=" + key_to_string(z), l, r)) return rec.take();
      }
    }
  return rec.take();
}

// m(S (x) id)mu = e.eps = m(id (x) S)mu on single keys, and S(xy) = S(y)S(x)
// on pairs.
template <class Key>
Report check_antipode(const HopfDef<Key>& h, int bound) {
  Recorder rec("antipode", h.name, bound);
  const auto keys = detail::keys_within(h, bound);
  Antipode<Key> s(h);
  for (const auto& x : keys) {
    std::string in = "x=" + key_to_string(x);
    Elem<Key> expected;
    expected.add_term(h.unit, h.counit(x));
    Elem<Key> left, right;
    for (const auto& [t, c] : h.coproduct(x)) {
      left.add_scaled(h.mul(s(t.first), Elem<Key>(t.second)), c);
      right.add_scaled(h.mul(Elem<Key>(t.first), s(t.second)), c);
    }
    if (!rec.equal("antipode-left", in, left, expected)) return rec.take();
    if (!rec.equal("antipode-right", in, right, expected)) return rec.take();
  }
  for (const auto& x : keys)
    for (const auto& y : keys) {
      if (h.measure(x) + h.measure(y) > bound) continue;
      std::string in = "x=" + key_to_string(x) + ", y=" + key_to_string(y);
      if (!rec.equal("antipode-antimorphism", in, s(h.product(x, y)), h.mul(s(y), s(x)))) return rec.take();
    }
  return rec.take();
}

// <m_A(x (x) y), z> = <x (x) y, mu_B(z)> and <mu_A(x), y (x) z> = <x, m_B(y (x) z)>.
template <class KA, class KB>
Report check_dual_pair(const HopfDef<KA>& a, const HopfDef<KB>& b, const Pairing<KA, KB>& p, int bound) {
  Recorder rec("dual-pair", a.name + "," + b.name, bound);
  const auto ka = detail::keys_within(a, bound);
  const auto kb = detail::keys_within(b, bound);
  detail::Cached<KA> ca(a);
  detail::Cached<KB> cb(b);

  for (const auto& x : ka)
    for (const auto& y : ka) {
      if (a.measure(x) + a.measure(y) > bound) continue;
      const auto& xy = ca.mul(x, y);
      Tensor<KA> xt({x, y});
      for (const auto& z : kb) {
        std::string in = "x=" + key_to_string(x) + ", y=" + key_to_string(y) + ", z=" + key_to_string(z);
        if (!rec.equal("product-coproduct", in, pair(p, xy, Elem<KB>(z)), pair(p, xt, cb.comul(z))))
          return rec.take();
      }
    }
  for (const auto& y : kb)
    for (const auto& z : kb) {
      if (b.measure(y) + b.measure(z) > bound) continue;
      const auto& yz = cb.mul(y, z);
      Tensor<KB> yt({y, z});
      for (const auto& x : ka) {
        std::string in = "x=" + key_to_string(x) + ", y=" + key_to_string(y) + ", z=" + key_to_string(z);
        if (!rec.equal("coproduct-product", in, pair(p, ca.comul(x), yt), pair(p, Elem<KA>(x), yz)))
          return rec.take();
      }
    }
  return rec.take();
}

enum class Halves { Algebra, Coalgebra, Both };

inline std::string halves_name(Halves h) {
  switch (h) {
    case Halves::Algebra:
      return "algebra";
    case Halves::Coalgebra:
      return "coalgebra";
    default:
      return "both";
  }
}

template <class KA, class KB>
using LinearMap = std::function<Elem<KB>(const KA&)>;

// f . m_A = m_B . (f (x) f) on pairs and (f (x) f) . mu_A = mu_B . f on keys,
// together with the unit and counit conditions.
template <class KA, class KB>
Report check_hopf_morphism(const LinearMap<KA, KB>& f, const HopfDef<KA>& a, const HopfDef<KB>& b, int bound,
                           Halves halves = Halves::Both, const std::string& map_name = "f") {
  Recorder rec("morphism/" + halves_name(halves), map_name + ":" + a.name + "->" + b.name, bound);
  const auto keys = detail::keys_within(a, bound);
  detail::Cached<KA> ca(a);
  detail::Cached<KB> cb(b);
  std::map<KA, Elem<KB>> fmemo;
  auto fk = [&](const KA& k) -> const Elem<KB>& {
    if (auto it = fmemo.find(k); it != fmemo.end()) return it->second;
    return fmemo.emplace(k, f(k)).first->second;
  };
  auto fe = [&](const Elem<KA>& x) {
    Elem<KB> out;
    for (const auto& [k, c] : x) out.add_scaled(fk(k), c);
    return out;
  };

  if (halves != Halves::Coalgebra) {
    if (!rec.equal("unit", key_to_string(a.unit), fk(a.unit), Elem<KB>(b.unit))) return rec.take();
    for (const auto& x : keys)
      for (const auto& y : keys) {
        if (a.measure(x) + a.measure(y) > bound) continue;
        std::string in = "x=" + key_to_string(x) + ", y=" + key_to_string(y);
        if (!rec.equal("multiplicative", in, fe(ca.mul(x, y)), cb.mul(fk(x), fk(y)))) return rec.take();
      }
  }
  if (halves != Halves::Algebra) {
    for (const auto& x : keys) {
      std::string in = "x=" + key_to_string(x);
      if (!rec.equal("counit", in, b.counit(fk(x)), a.counit(x))) return rec.take();
      Tensor<KB> lhs;
      for (const auto& [t, c] : ca.comul(x)) lhs.add_scaled(tensor(fk(t.first), fk(t.second)), c);
      if (!rec.equal("comultiplicative", in, lhs, cb.comul(fk(x)))) return rec.take();
    }
  }
  return rec.take();
}

}  // namespace wordhopf

#endif  // WORDHOPF_HOPF_HPP
