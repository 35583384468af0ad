#pragma once

#include "bigint.hpp"
#include "nullvariety.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypernull {

//! Exponent -> exact count. Zero counts are never stored.
struct SequencePoly
{
  int n = 0;
  std::map<int, BigInt> coeffs;

  BigInt coeff(int e) const
  {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? BigInt(0) : it->second;
  }

  void add_term(int e, const BigInt& a)
  {
    if (a == 0)
      return;
    BigInt& slot = coeffs[e];
    slot += a;
    if (slot == 0)
      coeffs.erase(e);
  }

  //! Sum of all counts.
  BigInt total() const
  {
    BigInt t = 0;
    for (const auto& [e, a] : coeffs)
      t += a;
    return t;
  }

  bool operator==(const SequencePoly&) const = default;
};

//! y^shift * scale * p, re-indexed to n.
inline SequencePoly scaled_shift(const SequencePoly& p, int shift, const BigInt& scale, int n)
{
  SequencePoly out{n, {}};
  for (const auto& [e, a] : p.coeffs)
    out.add_term(e + shift, a * scale);
  return out;
}

inline SequencePoly operator+(SequencePoly p, const SequencePoly& q)
{
  for (const auto& [e, a] : q.coeffs)
    p.add_term(e, a);
  return p;
}

inline SequencePoly make_poly(int n, std::map<int, BigInt> coeffs)
{
  SequencePoly p{n, {}};
  for (const auto& [e, a] : coeffs)
    p.add_term(e, a);
  return p;
}

enum class Provenance { Given, Enumeration, Recurrence, Override };

inline const char* to_string(Provenance p)
{
  switch (p) {
  case Provenance::Given: return "given";
  case Provenance::Enumeration: return "enumeration";
  case Provenance::Recurrence: return "recurrence";
  case Provenance::Override: return "override";
  }
  return "?";
}

//! Codimension-indexed sequences; index i of each vector holds n = i.
struct Sequences
{
  std::vector<SequencePoly> g;
  std::vector<SequencePoly> b;
  std::vector<SequencePoly> c;
  std::vector<Provenance> source;
};

//! g_n, b_n, c_n from g_{n-2}, g_{n-3}.., valid for n >= 5:
//!   g_n = 2y^2 g_{n-2} + y^4 b_{n-3} + y^2(y^2 - 1) c_{n-2}
//!   b_n = y^2 g_{n-2} - y^2 c_{n-2}
//!   c_n = y^2 b_{n-2} + y^2 c_{n-2}
inline void recurrence_step(const Sequences& s, int n, SequencePoly& g, SequencePoly& b, SequencePoly& c)
{
  const auto& g2 = s.g[n - 2];
  const auto& b2 = s.b[n - 2];
  const auto& b3 = s.b[n - 3];
  const auto& c2 = s.c[n - 2];
  g = scaled_shift(g2, 2, 2, n) + scaled_shift(b3, 4, 1, n) + scaled_shift(c2, 4, 1, n) +
      scaled_shift(c2, 2, -1, n);
  b = scaled_shift(g2, 2, 1, n) + scaled_shift(c2, 2, -1, n);
  c = scaled_shift(b2, 2, 1, n) + scaled_shift(c2, 2, 1, n);
}

inline void extend_by_recurrence(Sequences& s, int from, int n_max)
{
  for (int n = from; n <= n_max; ++n) {
    SequencePoly g, b, c;
    recurrence_step(s, n, g, b, c);
    s.g.push_back(std::move(g));
    s.b.push_back(std::move(b));
    s.c.push_back(std::move(c));
    s.source.push_back(Provenance::Recurrence);
  }
}

//! g, b, c for n = 0..n_max. Values through n = 5 are the known small
//! values; n = 5 is also recomputed by the recurrence and any disagreement is
//! a hard error.
inline Sequences gbc_sequences(int n_max)
{
  if (n_max < 0)
    throw std::invalid_argument("n_max must be non-negative");
  Sequences s;
  s.g = {make_poly(0, {{1, 1}}), make_poly(1, {{2, 1}}), make_poly(2, {{3, 2}}),
         make_poly(3, {{4, 3}}), make_poly(4, {{6, 3}, {4, 1}}), make_poly(5, {{8, 1}, {6, 5}})};
  s.b = {make_poly(0, {}), make_poly(1, {}), make_poly(2, {}),
         make_poly(3, {{4, 1}}), make_poly(4, {{6, 1}}), make_poly(5, {{6, 2}})};
  s.c = {make_poly(0, {}), make_poly(1, {}), make_poly(2, {}),
         make_poly(3, {{4, 1}}), make_poly(4, {{4, 1}}), make_poly(5, {{6, 2}})};
  s.source.assign(6, Provenance::Given);

  SequencePoly g5, b5, c5;
  recurrence_step(s, 5, g5, b5, c5);
  if (g5 != s.g[5] || b5 != s.b[5] || c5 != s.c[5])
    throw std::logic_error("recurrence disagrees with the seeded n = 5 values");

  extend_by_recurrence(s, 6, n_max);
  s.g.resize(static_cast<std::size_t>(n_max) + 1);
  s.b.resize(static_cast<std::size_t>(n_max) + 1);
  s.c.resize(static_cast<std::size_t>(n_max) + 1);
  s.source.resize(static_cast<std::size_t>(n_max) + 1);
  return s;
}

//! Sum of y^|B| over maximal S satisfying keep(S), one term per S.
inline SequencePoly enumerate_codim_poly(int n, const std::function<bool(const FibonacciSubset&)>& keep)
{
  SequencePoly p{n, {}};
  if (n < 3)
    return p;
  for_each_fibonacci_subset(n, [&](const FibonacciSubset& s) {
    if (is_maximal(s) && keep(s))
      p.add_term(static_cast<int>(admissible_sets(s).front().size()), 1);
  });
  return p;
}

inline bool has_left_pair(const FibonacciSubset& s) { return s.contains(3) && s.contains(5); }

inline bool has_right_pair(const FibonacciSubset& s)
{
  return s.contains(2 * s.n() - 3) && s.contains(2 * s.n() - 1);
}

inline bool has_right_single(const FibonacciSubset& s)
{
  return !s.contains(2 * s.n() - 3) && s.contains(2 * s.n() - 1);
}

//! g', b', c': as g, b, c but restricted to S containing 3 and 5. Initial
//! values for n <= 4 come from constrained enumeration; the recurrence
//! takes over from n = 5.
inline Sequences primed_sequences(int n_max)
{
  if (n_max < 0)
    throw std::invalid_argument("n_max must be non-negative");
  Sequences s;
  for (int n = 0; n <= 4; ++n) {
    s.g.push_back(enumerate_codim_poly(n, [](const auto& t) { return has_left_pair(t); }));
    s.b.push_back(enumerate_codim_poly(n, [](const auto& t) { return has_left_pair(t) && has_right_pair(t); }));
    s.c.push_back(enumerate_codim_poly(n, [](const auto& t) { return has_left_pair(t) && has_right_single(t); }));
    s.source.push_back(Provenance::Enumeration);
  }
  extend_by_recurrence(s, 5, n_max);
  s.g.resize(static_cast<std::size_t>(n_max) + 1);
  s.b.resize(static_cast<std::size_t>(n_max) + 1);
  s.c.resize(static_cast<std::size_t>(n_max) + 1);
  s.source.resize(static_cast<std::size_t>(n_max) + 1);
  return s;
}

//! Codimension to dimension: exponent e becomes 2n + 1 - e.
inline SequencePoly dimension_transform(const SequencePoly& seq)
{
  SequencePoly out{seq.n, {}};
  for (const auto& [e, a] : seq.coeffs) {
    if (e > 2 * seq.n + 1 || e < 0)
      throw std::domain_error("exponent " + std::to_string(e) + " outside [0, 2n+1]");
    out.add_term(2 * seq.n + 1 - e, a);
  }
  return out;
}

//! sum over dimension-indexed terms of count * d * 2^(d-1).
inline BigInt gm_weight(const SequencePoly& by_dim)
{
  BigInt total = 0;
  for (const auto& [d, a] : by_dim.coeffs)
    if (d > 0)
      total += a * d * (BigInt(1) << (d - 1));
  return total;
}

struct GmSeries
{
  std::vector<BigInt> eta;        //!< coefficients of H(z), multiplicity ignored
  std::vector<BigInt> eta_prime;  //!< coefficients of H'(z), equal to gm(0)
  std::vector<Provenance> eta_prime_source;
};

//! Both series for n = 0..n_max. eta_prime uses G = g + 2g' + b'; n = 1 and
//! n = 2 are overridden by the directly computed 3 and 13.
inline GmSeries gm_series(int n_max)
{
  if (n_max < 1)
    throw std::invalid_argument("n_max must be at least 1");
  const Sequences plain = gbc_sequences(n_max);
  const Sequences primed = primed_sequences(n_max);
  GmSeries out;
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out.eta.push_back(gm_weight(dimension_transform(plain.g[i])));
    const SequencePoly with_mult = plain.g[i] + scaled_shift(primed.g[i], 0, 2, n) + primed.b[i];
    out.eta_prime.push_back(gm_weight(dimension_transform(with_mult)));
    out.eta_prime_source.push_back(n >= 5 ? Provenance::Recurrence : Provenance::Enumeration);
  }
  out.eta_prime[1] = 3;
  out.eta_prime_source[1] = Provenance::Override;
  if (n_max >= 2) {
    out.eta_prime[2] = 13;
    out.eta_prime_source[2] = Provenance::Override;
  }
  return out;
}

//! F_n with F_1 = F_2 = 1.
inline BigInt fibonacci(int n)
{
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt t = a + b;
    a = b;
    b = t;
  }
  return a;
}

//! eta_n <= F_n (n + 1) 2^n.
inline bool fibonacci_bound_check(int n, const GmSeries& series)
{
  if (n < 1 || n >= static_cast<int>(series.eta.size()))
    throw std::out_of_range("n outside the computed series");
  return series.eta[static_cast<std::size_t>(n)] <= fibonacci(n) * (n + 1) * (BigInt(1) << n);
}

inline bool fibonacci_bound_check(int n)
{
  return fibonacci_bound_check(n, gm_series(n));
}

}  // namespace hypernull
