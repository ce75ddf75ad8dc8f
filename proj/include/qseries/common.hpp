#ifndef QSERIES_COMMON_HPP_
#define QSERIES_COMMON_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qseries {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponents live in plain machine integers; catalog workloads stay far
// below this range and window arithmetic saturates at kExactOrder.
using Exp = long long;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroLeadingCoefficient : Error {
  using Error::Error;
};
struct NonpositiveBaseExponent : Error {
  using Error::Error;
};
struct OrderExceeded : Error {
  using Error::Error;
};
struct DivergentProduct : Error {
  using Error::Error;
};
struct UnboundedDoubleSum : Error {
  using Error::Error;
};
struct AppellPole : Error {
  using Error::Error;
};
struct ThetaDenominatorZero : Error {
  using Error::Error;
};
struct SplitUndefined : Error {
  using Error::Error;
};
struct NonUnitDenominator : Error {
  using Error::Error;
};
struct NonIntegralCoefficient : Error {
  using Error::Error;
};
struct WindowTooSmall : Error {
  using Error::Error;
};
struct OffsetMismatch : Error {
  using Error::Error;
};
struct SyntaxError : Error {
  std::size_t offset;
  SyntaxError(const std::string& what, std::size_t at)
      : Error(what + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};
struct UnknownIdentifier : Error {
  using Error::Error;
};
struct UndeclaredParameter : Error {
  using Error::Error;
};
struct EvaluationError : Error {
  using Error::Error;
};

// binom(n, k) for integer n (possibly negative) and k >= 0, as the falling
// factorial n(n-1)...(n-k+1)/k!.  binom(-2, 2) = 3, binom(5, 2) = 10.
inline Int binomial(Int n, long long k) {
  if (k < 0) return 0;
  Int num = 1;
  for (long long i = 0; i < k; ++i) num *= (n - i);
  Int den = 1;
  for (long long i = 2; i <= k; ++i) den *= i;
  return num / den;
}

inline Exp binom2(Exp n) { return n * (n - 1) / 2; }

// Floor division, exact for negative operands: floor_div(-1, 2) = -1.
inline Exp floor_div(Exp a, Exp b) {
  Exp q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// A value of the form sign * q^exp; the argument type for theta, Hecke and
// Appell constructors as well as for substitution bases like -q^5.
struct SignedMonomial {
  int sign = 1;  // +1 or -1
  Exp exp = 0;

  friend SignedMonomial operator*(SignedMonomial a, SignedMonomial b) {
    return {a.sign * b.sign, a.exp + b.exp};
  }
  SignedMonomial inverse() const { return {sign, -exp}; }
  SignedMonomial pow(Exp k) const {
    int s = (sign == 1 || k % 2 == 0) ? 1 : -1;
    return {s, exp * k};
  }
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

inline SignedMonomial mono(int sign, Exp e) { return {sign, e}; }
inline SignedMonomial qpow(Exp e) { return {1, e}; }

inline std::string to_string(const SignedMonomial& m) {
  std::string s = m.sign < 0 ? "-" : "";
  if (m.exp == 0) return s.empty() ? "1" : "-1";
  s += "q";
  if (m.exp != 1) s += "^" + std::to_string(m.exp);
  return s;
}

}  // namespace qseries

#endif  // QSERIES_COMMON_HPP_
