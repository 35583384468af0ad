#pragma once

#include "hyperpath.hpp"
#include "nullvariety.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypernull {

//! Brute-force decomposition of the nullvariety of P_n^3, derived directly
//! from the link polynomials without the Fibonacci-subset machinery.
namespace oracle {

inline constexpr int kDefaultBound = 8;

//! One endpoint chosen from each degree-one link monomial x_i x_j.
struct CoverChoice
{
  std::vector<int> assignment;

  std::set<int> chosen() const { return {assignment.begin(), assignment.end()}; }
};

//! Variables forced to zero plus the binomials p_a that survive them.
struct CandidateIdeal
{
  std::set<int> variables;
  std::set<int> binomials;

  auto operator<=>(const CandidateIdeal&) const = default;

  std::vector<Generator> generators() const
  {
    std::vector<Generator> gens;
    for (int i : variables)
      gens.push_back(Generator::variable(i));
    for (int a : binomials)
      gens.push_back(Generator::binomial(a));
    return gens;
  }
};

inline bool any_forced(const std::set<int>& zero, int i, int j)
{
  return zero.count(i) || zero.count(j);
}

//! p_a vanishes on V(b) when it is a generator or both monomials contain a
//! forced-zero variable.
inline bool vanishes_on(const CandidateIdeal& b, const Generator& g)
{
  if (g.is_variable())
    return b.variables.count(g.index) > 0;
  const int a = g.index;
  if (b.binomials.count(a))
    return true;
  return any_forced(b.variables, a - 2, a - 1) && any_forced(b.variables, a + 1, a + 2);
}

//! True iff V(inner) ⊆ V(outer), i.e. every generator of outer vanishes on
//! V(inner).
inline bool variety_contained_in(const CandidateIdeal& inner, const CandidateIdeal& outer)
{
  const auto gens = outer.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Generator& g) { return vanishes_on(inner, g); });
}

inline std::vector<CoverChoice> cover_choices(int n)
{
  const auto links = degree_one_links(build_hyperpath(n, 3));
  const std::size_t e = links.size();
  std::vector<CoverChoice> out;
  out.reserve(std::size_t{1} << e);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    CoverChoice c;
    for (std::size_t t = 0; t < e; ++t)
      c.assignment.push_back((mask >> t) & 1 ? links[t].second : links[t].first);
    out.push_back(std::move(c));
  }
  return out;
}

namespace detail {

struct Binomial
{
  int a;
  int l0, l1, r0, r1;
};

// Splits any binomial that has exactly one dead monomial; the live monomial
// must then vanish, which is a further choice of one of its two variables.
inline void resolve(const std::vector<Binomial>& binomials, std::set<int> zero,
                    std::set<CandidateIdeal>& out)
{
  for (const auto& p : binomials) {
    const bool left_dead = any_forced(zero, p.l0, p.l1);
    const bool right_dead = any_forced(zero, p.r0, p.r1);
    if (left_dead == right_dead)
      continue;
    const int u = left_dead ? p.r0 : p.l0;
    const int w = left_dead ? p.r1 : p.l1;
    auto with_u = zero;
    with_u.insert(u);
    resolve(binomials, std::move(with_u), out);
    zero.insert(w);
    resolve(binomials, std::move(zero), out);
    return;
  }
  CandidateIdeal c;
  c.variables = zero;
  for (const auto& p : binomials)
    if (!any_forced(zero, p.l0, p.l1) && !any_forced(zero, p.r0, p.r1))
      c.binomials.insert(p.a);
  out.insert(std::move(c));
}

inline std::vector<Binomial> link_binomials(const Hyperpath& h)
{
  std::vector<Binomial> out;
  for (int v = 1; v <= h.vertex_count(); ++v) {
    if (h.degree(v) != 2)
      continue;
    const auto t = h.link_terms(v);
    out.push_back({v, t[0][0], t[0][1], t[1][0], t[1][1]});
  }
  return out;
}

}  // namespace detail

inline void check_bound(int n, int bound)
{
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  if (n > bound)
    throw std::out_of_range("oracle refuses n = " + std::to_string(n) + " above bound " +
                            std::to_string(bound));
}

//! Every distinct candidate reached from some cover choice, before pruning.
inline std::vector<CandidateIdeal> candidates(int n, int bound = kDefaultBound)
{
  check_bound(n, bound);
  const auto binomials = detail::link_binomials(build_hyperpath(n, 3));
  std::set<CandidateIdeal> found;
  for (const auto& choice : cover_choices(n))
    detail::resolve(binomials, choice.chosen(), found);
  return {found.begin(), found.end()};
}

//! Candidates not strictly contained in another candidate.
inline std::vector<CandidateIdeal> prune(const std::vector<CandidateIdeal>& all)
{
  std::vector<CandidateIdeal> kept;
  for (const auto& b : all) {
    const bool dominated = std::any_of(all.begin(), all.end(), [&](const CandidateIdeal& other) {
      return other != b && variety_contained_in(b, other);
    });
    if (!dominated)
      kept.push_back(b);
  }
  return kept;
}

inline std::vector<CandidateIdeal> brute_force_components(int n, int bound = kDefaultBound)
{
  return prune(candidates(n, bound));
}

struct CheckResult
{
  int n = 0;
  std::size_t oracle_count = 0;
  std::size_t enumeration_count = 0;
  std::vector<std::string> only_in_oracle;
  std::vector<std::string> only_in_enumeration;

  bool ok() const { return only_in_oracle.empty() && only_in_enumeration.empty(); }
};

//! Compares the brute-force decomposition with components(n) as sets of
//! generator sets.
inline CheckResult check(int n, int bound = kDefaultBound)
{
  std::set<std::string> brute;
  for (const auto& c : brute_force_components(n, bound))
    brute.insert(render_generators(c.generators()));
  std::set<std::string> structured;
  for (const auto& c : components(n))
    structured.insert(render_ideal(c));

  CheckResult r;
  r.n = n;
  r.oracle_count = brute.size();
  r.enumeration_count = structured.size();
  std::set_difference(brute.begin(), brute.end(), structured.begin(), structured.end(),
                      std::back_inserter(r.only_in_oracle));
  std::set_difference(structured.begin(), structured.end(), brute.begin(), brute.end(),
                      std::back_inserter(r.only_in_enumeration));
  return r;
}

}  // namespace oracle
}  // namespace hypernull
