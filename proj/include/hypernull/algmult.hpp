#pragma once

#include "bigint.hpp"
#include "polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypernull {

//! u = (k-1)^(k-1), v = k^(k-2).
struct NullityParams
{
  BigInt u;
  BigInt v;
};

inline void require_rank(int k)
{
  if (k < 3)
    throw std::invalid_argument("uniformity k must be at least 3");
}

inline NullityParams nullity_params(int k)
{
  require_rank(k);
  return {ipow(k - 1, static_cast<std::uint32_t>(k - 1)), ipow(k, static_cast<std::uint32_t>(k - 2))};
}

//! x -> lambda^k / (lambda^k - x), reduced.
inline RationalFn apply_f(const RationalFn& x, int k)
{
  const IntPoly lk_den = x.den.shifted_up(static_cast<std::size_t>(k));
  return RationalFn::make(lk_den, lk_den - x.num);
}

//! f^s(1) for s >= -1, where f^-1(1) = 0 and f^0(1) = 1.
inline RationalFn f_iterate(int s, int k)
{
  require_rank(k);
  if (s < -1)
    throw std::invalid_argument("iteration count must be >= -1");
  if (s == -1)
    return RationalFn::make(IntPoly{}, IntPoly::constant(1));
  RationalFn r = RationalFn::make(IntPoly::constant(1), IntPoly::constant(1));
  for (int i = 0; i < s; ++i)
    r = apply_f(r, k);
  return r;
}

//! Order of lambda = 0 as a root of the numerator minus that of the
//! denominator. Negative for a pole at zero.
inline int zero_mult(const RationalFn& r)
{
  if (r.num.is_zero())
    throw std::domain_error("zero rational function has no zero-root multiplicity");
  return r.num.zero_order() - r.den.zero_order();
}

//! lambda^k - r.
inline RationalFn lambda_k_minus(const RationalFn& r, int k)
{
  return RationalFn::make(r.den.shifted_up(static_cast<std::size_t>(k)) - r.num, r.den);
}

//! Exponent of the s-th factor in the hyperpath product formula:
//! v^s (u - v) u^(n-s-1) for s < n, and v^n for s = n.
inline BigInt nu(int n, int k, int s)
{
  if (s < 0 || s > n)
    throw std::out_of_range("nu: s must lie in [0, n]");
  const auto p = nullity_params(k);
  if (s == n)
    return ipow(p.v, static_cast<std::uint32_t>(n));
  return ipow(p.v, static_cast<std::uint32_t>(s)) * (p.u - p.v) *
         ipow(p.u, static_cast<std::uint32_t>(n - s - 1));
}

//! Zero-root order of lambda^k - f^(s-1)(1) for s = 0..s_max, each taken from
//! the actual iteration.
inline std::vector<int> link_factor_orders(int k, int s_max)
{
  require_rank(k);
  std::vector<int> orders;
  orders.reserve(static_cast<std::size_t>(s_max) + 1);
  RationalFn prev = f_iterate(-1, k);
  for (int s = 0; s <= s_max; ++s) {
    orders.push_back(zero_mult(lambda_k_minus(prev, k)));
    prev = s == 0 ? f_iterate(0, k) : apply_f(prev, k);
  }
  return orders;
}

//! Zero-root order contributed by the product over s, closed form:
//! -(k-1) u^n + k (u^(n+1) - (-v)^(n+1)) / (u + v).
inline BigInt F_term(int n, int k)
{
  if (n < 2)
    throw std::invalid_argument("F_term requires n >= 2");
  const auto [u, v] = nullity_params(k);
  const auto e = static_cast<std::uint32_t>(n);
  const BigInt alt = ipow(-v, e + 1);
  return -(k - 1) * ipow(u, e) + exact_div(k * (ipow(u, e + 1) - alt), u + v, "F_term");
}

//! Same quantity summed factor by factor: sum_s nu(n,k,s) * (order_s - (k-1)),
//! with orders from link_factor_orders(k, >= n).
inline BigInt F_term_from_orders(int n, int k, const std::vector<int>& orders)
{
  if (n < 2)
    throw std::invalid_argument("F_term requires n >= 2");
  if (static_cast<int>(orders.size()) <= n)
    throw std::invalid_argument("order table too short");
  BigInt total = 0;
  for (int s = 0; s <= n; ++s)
    total += nu(n, k, s) * (orders[static_cast<std::size_t>(s)] - (k - 1));
  return total;
}

//! D_{n,k} by the recurrence D_n = (k-2)u^n + u D_{n-1} + F_{n,k},
//! D_1 = k(u - v).
inline BigInt am_zero_rec(int n, int k)
{
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  const auto [u, v] = nullity_params(k);
  BigInt d = k * (u - v);
  for (int m = 2; m <= n; ++m)
    d = (k - 2) * ipow(u, static_cast<std::uint32_t>(m)) + u * d + F_term(m, k);
  return d;
}

//! D_{n,k} in closed form:
//! (u^n([nk-n+1]u^2 + [nk-2n+2]uv - [k+n-1]v^2) + k(-v)^(n+2)) / (u+v)^2.
inline BigInt am_zero_closed(int n, int k)
{
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  const auto [u, v] = nullity_params(k);
  const BigInt nn = n;
  const BigInt poly = (nn * k - nn + 1) * u * u + (nn * k - 2 * nn + 2) * u * v - (k + nn - 1) * v * v;
  const BigInt num = ipow(u, static_cast<std::uint32_t>(n)) * poly + k * ipow(-v, static_cast<std::uint32_t>(n + 2));
  return exact_div(num, (u + v) * (u + v), "am_zero_closed");
}

//! D_{n,k} / (n (k-1)^(n(k-1)+1)), exact.
inline BigRational asymptotic_report(int n, int k)
{
  require_rank(k);
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  const BigInt scale = n * ipow(k - 1, static_cast<std::uint32_t>(n * (k - 1) + 1));
  return BigRational(am_zero_closed(n, k), scale);
}

//! 7 D_{n,3} >= 4^n (5n + 3), stated for n >= 12.
inline bool lower_bound_check(int n)
{
  if (n < 12)
    throw std::invalid_argument("lower bound is only claimed for n >= 12");
  return 7 * am_zero_closed(n, 3) >= ipow(4, static_cast<std::uint32_t>(n)) * (5 * n + 3);
}

}  // namespace hypernull
