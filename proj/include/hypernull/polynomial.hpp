#pragma once

#include "bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypernull {

//! Dense univariate polynomial in lambda with exact integer coefficients;
//! coefficient i multiplies lambda^i. Trailing zeros are trimmed.
class IntPoly
{
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs)
    : c_(std::move(coeffs))
  {
    trim();
  }

  static IntPoly constant(const BigInt& a) { return IntPoly({a}); }

  static IntPoly monomial(std::size_t power, const BigInt& a = 1)
  {
    std::vector<BigInt> c(power + 1);
    c[power] = a;
    return IntPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  //! Multiplicity of lambda = 0 as a root.
  int zero_order() const
  {
    if (is_zero())
      throw std::domain_error("zero polynomial has no zero-root order");
    std::size_t i = 0;
    while (c_[i] == 0)
      ++i;
    return static_cast<int>(i);
  }

  IntPoly shifted_up(std::size_t m) const
  {
    if (is_zero())
      return {};
    std::vector<BigInt> c(m);
    c.insert(c.end(), c_.begin(), c_.end());
    return IntPoly(std::move(c));
  }

  IntPoly shifted_down(std::size_t m) const
  {
    if (is_zero())
      return {};
    if (static_cast<int>(m) > zero_order())
      throw std::domain_error("lambda power does not divide polynomial");
    return IntPoly(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(m), c_.end()));
  }

  BigInt content() const
  {
    BigInt g = 0;
    for (const auto& a : c_)
      g = gcd(g, a);
    return g;
  }

  IntPoly divided_exactly(const BigInt& d) const
  {
    std::vector<BigInt> c = c_;
    for (auto& a : c)
      a = exact_div(a, d, "IntPoly::divided_exactly");
    return IntPoly(std::move(c));
  }

  IntPoly operator-() const
  {
    std::vector<BigInt> c = c_;
    for (auto& a : c)
      a = -a;
    return IntPoly(std::move(c));
  }

  friend IntPoly operator+(const IntPoly& p, const IntPoly& q)
  {
    std::vector<BigInt> c(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = p.coeff(i) + q.coeff(i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& p, const IntPoly& q) { return p + (-q); }

  friend IntPoly operator*(const IntPoly& p, const IntPoly& q)
  {
    if (p.is_zero() || q.is_zero())
      return {};
    std::vector<BigInt> c(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (p.c_[i] == 0)
        continue;
      for (std::size_t j = 0; j < q.c_.size(); ++j)
        c[i + j] += p.c_[i] * q.c_[j];
    }
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const BigInt& a, const IntPoly& p)
  {
    std::vector<BigInt> c = p.c_;
    for (auto& x : c)
      x *= a;
    return IntPoly(std::move(c));
  }

  bool operator==(const IntPoly&) const = default;

  std::string to_string(const char* var = "L") const
  {
    if (is_zero())
      return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const BigInt& a = c_[i];
      if (a == 0)
        continue;
      const BigInt mag = abs(a);
      out += a < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
      if (mag != 1 || i == 0)
        out += mag.str();
      if (i > 0)
        out += std::string(var) + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }

  std::vector<BigInt> c_;
};

inline IntPoly primitive_part(const IntPoly& p)
{
  if (p.is_zero())
    return p;
  IntPoly q = p.divided_exactly(p.content());
  return q.leading() < 0 ? -q : q;
}

//! Pseudo-remainder of p by d: lead(d)^(deg p - deg d + 1) * p mod d.
inline IntPoly pseudo_remainder(IntPoly p, const IntPoly& d)
{
  if (d.is_zero())
    throw std::domain_error("pseudo-remainder by zero");
  const BigInt& ld = d.leading();
  while (!p.is_zero() && p.degree() >= d.degree()) {
    const auto shift = static_cast<std::size_t>(p.degree() - d.degree());
    p = ld * p - IntPoly::monomial(shift, p.leading()) * d;
  }
  return p;
}

//! Primitive polynomial GCD over Z via the primitive remainder sequence.
inline IntPoly poly_gcd(const IntPoly& p, const IntPoly& q)
{
  IntPoly a = primitive_part(p);
  IntPoly b = primitive_part(q);
  if (a.degree() < b.degree())
    std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

//! Exact quotient p / d; throws if any step leaves a fractional coefficient
//! or a nonzero remainder.
inline IntPoly exact_quotient(IntPoly p, const IntPoly& d)
{
  if (d.is_zero())
    throw std::domain_error("division by zero polynomial");
  if (p.is_zero())
    return p;
  std::vector<BigInt> q(static_cast<std::size_t>(std::max(0, p.degree() - d.degree() + 1)));
  while (!p.is_zero() && p.degree() >= d.degree()) {
    const auto shift = static_cast<std::size_t>(p.degree() - d.degree());
    const BigInt t = exact_div(p.leading(), d.leading(), "exact_quotient");
    q[shift] = t;
    p = p - IntPoly::monomial(shift, t) * d;
  }
  if (!p.is_zero())
    throw std::domain_error("polynomial division leaves a remainder");
  return IntPoly(std::move(q));
}

//! num / den over Z[lambda]. normalize() cancels the common lambda power and
//! the common integer content, and makes the leading coefficient of den
//! positive. It does not cancel other common polynomial factors.
struct RationalFn
{
  IntPoly num;
  IntPoly den = IntPoly::constant(1);

  static RationalFn make(IntPoly num, IntPoly den)
  {
    RationalFn r{std::move(num), std::move(den)};
    r.normalize();
    return r;
  }

  void normalize()
  {
    if (den.is_zero())
      throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
      den = IntPoly::constant(1);
      return;
    }
    const int common = std::min(num.zero_order(), den.zero_order());
    num = num.shifted_down(static_cast<std::size_t>(common));
    den = den.shifted_down(static_cast<std::size_t>(common));
    BigInt g = gcd(num.content(), den.content());
    if (den.leading() < 0)
      g = -g;
    num = num.divided_exactly(g);
    den = den.divided_exactly(g);
  }

  bool operator==(const RationalFn&) const = default;
};

//! Cancels the full polynomial GCD of numerator and denominator.
inline RationalFn reduce_fully(const RationalFn& r)
{
  if (r.num.is_zero())
    return r;
  const IntPoly g = poly_gcd(r.num, r.den);
  return RationalFn::make(exact_quotient(r.num, g), exact_quotient(r.den, g));
}

}  // namespace hypernull
