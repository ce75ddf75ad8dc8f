#ifndef QSERIES_SERIES_HPP_
#define QSERIES_SERIES_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qseries/common.hpp"

namespace qseries {

// Truncated Laurent series in q with exact rational coefficients and an
// explicit validity window: the value is authoritative for every exponent
// <= order() (exponents below the window start are exact zeros).  Arithmetic
// computes the tightest correct window; it never silently extends validity.
class Series {
 public:
  // Order used for exact values (monomials, finite sums thereof) whose
  // coefficients are known at every exponent.
  static constexpr Exp kExactOrder = Exp(1) << 50;

  Series() : lo_(0), order_(kExactOrder) {}
  Series(Exp lo, Exp order) : lo_(lo), order_(order) {}

  static Series zero(Exp order = kExactOrder) { return Series(0, order); }

  static Series constant(const Rational& c, Exp order = kExactOrder) {
    Series s(0, order);
    if (c != 0) s.c_[0] = c;
    return s;
  }

  static Series monomial(const Rational& c, Exp e, Exp order = kExactOrder) {
    Series s(0, order);
    if (c != 0 && e <= order) {
      s.c_[e] = c;
      s.lo_ = e;
    }
    return s;
  }

  static Series monomial(const SignedMonomial& m, Exp order = kExactOrder) {
    return monomial(Rational(m.sign), m.exp, order);
  }

  Exp lo() const { return lo_; }
  Exp order() const { return order_; }
  bool exact() const { return order_ >= kExactOrder; }
  bool is_zero() const { return c_.empty(); }
  std::size_t term_count() const { return c_.size(); }
  const std::map<Exp, Rational>& terms() const { return c_; }

  // Smallest exponent carrying a nonzero coefficient; for a series that is
  // zero on its whole window this is order()+1 (the first unknown slot).
  Exp lo_effective() const {
    if (c_.empty()) return sat_add(order_, 1);
    return c_.begin()->first;
  }

  const Rational& at(Exp e) const {
    static const Rational kZero = 0;
    auto it = c_.find(e);
    return it == c_.end() ? kZero : it->second;
  }

  void set(Exp e, Rational v) {
    if (e > order_) return;
    if (v == 0) {
      c_.erase(e);
      return;
    }
    lo_ = std::min(lo_, e);
    c_[e] = std::move(v);
  }

  void add_to(Exp e, const Rational& v) {
    if (e > order_ || v == 0) return;
    lo_ = std::min(lo_, e);
    auto [it, fresh] = c_.try_emplace(e, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }

  // Restrict the window to order O, dropping higher terms.
  Series truncated(Exp O) const {
    Series r(lo_, std::min(order_, O));
    for (const auto& [e, v] : c_) {
      if (e > O) break;
      r.c_.emplace_hint(r.c_.end(), e, v);
    }
    return r;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.lo_, b.lo_), std::min(a.order_, b.order_));
    for (const auto& [e, v] : a.c_)
      if (e <= r.order_) r.c_[e] = v;
    for (const auto& [e, v] : b.c_) {
      if (e > r.order_) continue;
      auto [it, fresh] = r.c_.try_emplace(e, v);
      if (!fresh) {
        it->second += v;
        if (it->second == 0) r.c_.erase(it);
      }
    }
    return r;
  }

  friend Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.lo_, b.lo_), std::min(a.order_, b.order_));
    for (const auto& [e, v] : a.c_)
      if (e <= r.order_) r.c_[e] = v;
    for (const auto& [e, v] : b.c_) {
      if (e > r.order_) continue;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        r.c_.emplace(e, -v);
      } else {
        it->second -= v;
        if (it->second == 0) r.c_.erase(it);
      }
    }
    return r;
  }

  friend Series operator-(const Series& a) { return scale(a, Rational(-1)); }

  // Product window: the error term of a enters multiplied by b's lowest
  // monomial and vice versa, so order = min(order_a + lo_b, order_b + lo_a)
  // with effective lows.
  friend Series operator*(const Series& a, const Series& b) {
    Exp la = a.lo_effective(), lb = b.lo_effective();
    Exp order = std::min(sat_add(a.order_, lb), sat_add(b.order_, la));
    order = std::min(order, kExactOrder);
    Exp lo = std::min(sat_add(la, lb), order);
    Series r(lo, order);
    if (a.c_.empty() || b.c_.empty()) return r;
    // Accumulate densely over the result window; windows in this codebase
    // are at most a few hundred slots wide.
    Exp hi = std::min(order, sat_add(a.c_.rbegin()->first, b.c_.rbegin()->first));
    if (hi < lo) return r;
    std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, va] : a.c_) {
      for (const auto& [eb, vb] : b.c_) {
        Exp e = ea + eb;
        if (e > hi) break;
        dense[static_cast<std::size_t>(e - lo)] += va * vb;
      }
    }
    for (Exp e = lo; e <= hi; ++e) {
      Rational& v = dense[static_cast<std::size_t>(e - lo)];
      if (v != 0) r.c_.emplace_hint(r.c_.end(), e, std::move(v));
    }
    return r;
  }

  friend Series scale(const Series& a, const Rational& c) {
    Series r(a.lo_, a.order_);
    if (c == 0) return r;
    for (const auto& [e, v] : a.c_) r.c_.emplace_hint(r.c_.end(), e, v * c);
    return r;
  }

  friend Series shift(const Series& a, Exp k) {
    Series r(sat_add(a.lo_, k), sat_add(a.order_, k));
    for (const auto& [e, v] : a.c_) r.c_.emplace_hint(r.c_.end(), e + k, v);
    return r;
  }

  Series pow(Exp k) const {
    if (k < 0) throw Error("Series::pow: negative exponent");
    Series acc = Series::constant(1);
    Series base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return acc;
  }

  friend Series invert(const Series& a);
  friend Series compose_base(const Series& a, const SignedMonomial& base);

 private:
  static Exp sat_add(Exp a, Exp b) {
    if (a >= kExactOrder && b >= 0) return kExactOrder;
    if (b >= kExactOrder && a >= 0) return kExactOrder;
    Exp s = a + b;
    return std::min(s, kExactOrder);
  }

  Exp lo_;
  Exp order_;
  std::map<Exp, Rational> c_;
};

// Two-sided inverse up to the shared order.  Requires the lowest-exponent
// coefficient to be nonzero; monomial content q^lo is factored out first,
// so the result has lo = -lo_effective(a).
inline Series invert(const Series& a) {
  if (a.c_.empty())
    throw ZeroLeadingCoefficient("invert: series is zero on its window");
  if (a.exact() && a.c_.size() > 1)
    throw Error("invert: refusing an exact multi-term input; truncate first");
  Exp la = a.lo_effective();
  Exp rel_order = a.exact() ? 0 : a.order_ - la;
  std::vector<Rational> f(static_cast<std::size_t>(rel_order + 1));
  for (const auto& [e, v] : a.c_) {
    if (e - la <= rel_order) f[static_cast<std::size_t>(e - la)] = v;
  }
  std::vector<Rational> g(f.size());
  g[0] = Rational(1) / f[0];
  for (std::size_t n = 1; n < f.size(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (f[k] != 0 && g[n - k] != 0) acc += f[k] * g[n - k];
    }
    if (acc != 0) g[n] = -acc * g[0];
  }
  Series r(-la, a.exact() ? Series::kExactOrder : a.order_ - 2 * la);
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (g[n] != 0) r.c_.emplace_hint(r.c_.end(), -la + static_cast<Exp>(n), g[n]);
  }
  return r;
}

// Substitute q -> base, i.e. q -> sign * q^k with k >= 1; the coefficient of
// q^e lands at q^{k e} with sign^e.
inline Series compose_base(const Series& a, const SignedMonomial& base) {
  if (base.exp <= 0)
    throw NonpositiveBaseExponent("compose_base: base exponent must be >= 1");
  Exp k = base.exp;
  Exp order = a.exact() ? Series::kExactOrder : a.order_ * k;
  Series r(std::min(a.lo_effective() * k, order), order);
  for (const auto& [e, v] : a.c_) {
    int s = (base.sign == 1 || e % 2 == 0) ? 1 : -1;
    r.c_.emplace_hint(r.c_.end(), e * k, s == 1 ? v : -v);
  }
  return r;
}

inline Rational coefficient_at(const Series& a, Exp e) {
  if (e > a.order())
    throw OrderExceeded("coefficient_at: exponent " + std::to_string(e) +
                        " beyond validity window " + std::to_string(a.order()));
  return a.at(e);
}

struct Comparison {
  bool equal = true;
  Exp first_discrepancy = 0;  // meaningful only when !equal
  Rational delta;             // a - b at the first discrepancy
};

// Equality of all coefficients with exponent <= O; reports the smallest
// exponent of disagreement otherwise.
inline Comparison equal_up_to(const Series& a, const Series& b, Exp O) {
  if (O > a.order() || O > b.order())
    throw OrderExceeded("equal_up_to: order " + std::to_string(O) +
                        " beyond a validity window");
  Comparison res;
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    Exp xa = (ia != ea) ? ia->first : O + 1;
    Exp xb = (ib != eb) ? ib->first : O + 1;
    Exp e = std::min(xa, xb);
    if (e > O) break;
    Rational va = (xa == e) ? ia->second : Rational(0);
    Rational vb = (xb == e) ? ib->second : Rational(0);
    if (va != vb) {
      res.equal = false;
      res.first_discrepancy = e;
      res.delta = va - vb;
      return res;
    }
    if (xa == e) ++ia;
    if (xb == e) ++ib;
  }
  return res;
}

enum class ArithKind { Add, Sub, Mul };

inline Series arith(const Series& a, const Series& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return a + b;
    case ArithKind::Sub: return a - b;
    case ArithKind::Mul: return a * b;
  }
  throw Error("arith: bad kind");
}

// q-Pochhammer (x; base)_n = prod_{i=0}^{n-1} (1 - x base^i), truncated at O;
// n = nullopt means the infinite product, which requires x.exp >= 1.
inline Series pochhammer(const SignedMonomial& x, std::optional<Exp> n,
                         const SignedMonomial& base, Exp O) {
  if (base.exp <= 0)
    throw NonpositiveBaseExponent("pochhammer: base exponent must be >= 1");
  if (!n.has_value() && x.exp <= 0)
    throw DivergentProduct("pochhammer: infinite product needs x.exp >= 1");
  if (n.has_value() && *n < 0) throw Error("pochhammer: negative length");
  // Factor exponents x.exp + i*base.exp increase with i, so factors beyond O
  // are 1 + O(q^{>O}) and can be skipped.
  std::vector<SignedMonomial> factors;
  bool has_negative = false;
  for (Exp i = 0; !n.has_value() || i < *n; ++i) {
    SignedMonomial f = x * base.pow(i);
    if (f.exp > O) break;
    if (f.exp < 0) has_negative = true;
    factors.push_back(f);
  }
  if (has_negative) {
    // Exact polynomial product, truncated once at the end; only finite
    // products can reach this branch.
    Series r = Series::constant(1);
    for (const SignedMonomial& f : factors)
      r = r * (Series::constant(1) - Series::monomial(f));
    return r.truncated(O);
  }
  Series r = Series::constant(1, O);
  for (const SignedMonomial& f : factors)
    r = (r * (Series::constant(1) - Series::monomial(f))).truncated(O);
  return r;
}

inline std::string to_string(const Series& s, Exp up_to = Series::kExactOrder) {
  std::string out;
  Exp cap = std::min(up_to, s.order());
  for (const auto& [e, v] : s.terms()) {
    if (e > cap) break;
    if (!out.empty()) out += " + ";
    out += v.str() + "*q^" + std::to_string(e);
  }
  if (out.empty()) out = "0";
  out += "  (O=" + (s.exact() ? std::string("exact") : std::to_string(s.order())) + ")";
  return out;
}

}  // namespace qseries

#endif  // QSERIES_SERIES_HPP_
