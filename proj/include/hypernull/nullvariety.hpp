#pragma once

#include "bigint.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypernull {

//! Odd interior indices {3, 5, ..., 2n-1}; these are the degree-two vertices
//! of the 3-uniform hyperpath.
inline std::vector<int> odd_interior(int n)
{
  std::vector<int> a;
  for (int i = 3; i <= 2 * n - 1; i += 2)
    a.push_back(i);
  return a;
}

//! True iff no two consecutive elements of the odd interior are both absent.
inline bool covers_consecutive_pairs(int n, const std::vector<int>& sorted_members)
{
  auto has = [&](int a) { return std::binary_search(sorted_members.begin(), sorted_members.end(), a); };
  for (int a = 3; a + 2 <= 2 * n - 1; a += 2)
    if (!has(a) && !has(a + 2))
      return false;
  return true;
}

class FibonacciSubset
{
public:
  FibonacciSubset() = default;

  //! Validates membership and the covering condition.
  FibonacciSubset(int n, std::vector<int> members)
    : n_(n), members_(std::move(members))
  {
    if (n < 1)
      throw std::invalid_argument("n must be positive");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (int a : members_)
      if (a < 3 || a > 2 * n - 1 || a % 2 == 0)
        throw std::invalid_argument("member " + std::to_string(a) + " is not an odd interior index");
    if (!covers_consecutive_pairs(n, members_))
      throw std::invalid_argument("subset leaves two consecutive odd interior indices uncovered");
  }

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(int a) const
  {
    return std::binary_search(members_.begin(), members_.end(), a);
  }

  auto operator<=>(const FibonacciSubset&) const = default;

private:
  int n_ = 0;
  std::vector<int> members_;
};

//! Either the variable x_i or the binomial p_a = x_{a-2}x_{a-1} + x_{a+1}x_{a+2}.
struct Generator
{
  enum class Kind : std::uint8_t { Variable, Binomial };

  Kind kind = Kind::Variable;
  int index = 0;

  static constexpr Generator variable(int i) { return {Kind::Variable, i}; }
  static constexpr Generator binomial(int a) { return {Kind::Binomial, a}; }

  bool is_variable() const { return kind == Kind::Variable; }

  // Variables sort before binomials, then by index.
  auto operator<=>(const Generator&) const = default;

  std::string to_string() const
  {
    return (is_variable() ? "x" : "p") + std::to_string(index);
  }

  static Generator parse(const std::string& s)
  {
    if (s.size() < 2 || (s[0] != 'x' && s[0] != 'p'))
      throw std::invalid_argument("bad generator token '" + s + "'");
    std::size_t used = 0;
    const int idx = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1)
      throw std::invalid_argument("bad generator token '" + s + "'");
    return s[0] == 'x' ? variable(idx) : binomial(idx);
  }
};

//! An S-admissible generator set; also the ideal it generates. Generators are
//! kept sorted and unique.
struct GeneratorSet
{
  int n = 0;
  FibonacciSubset source;
  std::vector<Generator> generators;

  std::size_t size() const { return generators.size(); }

  bool operator==(const GeneratorSet& o) const
  {
    return n == o.n && generators == o.generators;
  }
};

struct Component
{
  GeneratorSet generator_set;

  int codim() const { return static_cast<int>(generator_set.size()); }
  int dim() const { return 2 * generator_set.n + 1 - codim(); }
};

namespace detail {

inline void normalize(std::vector<Generator>& gens)
{
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

}  // namespace detail

//! Visits the Fibonacci subsets of {3, ..., 2n-1} in lexicographic order of
//! their characteristic vectors (c_3, c_5, ..., c_{2n-1}), absent before present.
template <typename Visitor>
void for_each_fibonacci_subset(int n, Visitor&& visit)
{
  if (n < 3)
    throw std::invalid_argument("Fibonacci subset enumeration needs n >= 3");
  const std::vector<int> odd = odd_interior(n);
  const int m = static_cast<int>(odd.size());
  std::vector<char> in(m, 0);
  std::vector<int> members;
  members.reserve(m);

  std::function<void(int)> rec = [&](int pos) {
    if (pos == m) {
      members.clear();
      for (int i = 0; i < m; ++i)
        if (in[i])
          members.push_back(odd[i]);
      visit(FibonacciSubset(n, members));
      return;
    }
    if (pos == 0 || in[pos - 1]) {
      in[pos] = 0;
      rec(pos + 1);
    }
    in[pos] = 1;
    rec(pos + 1);
    in[pos] = 0;
  };
  rec(0);
}

inline std::vector<FibonacciSubset> enumerate_fibonacci_subsets(int n)
{
  std::vector<FibonacciSubset> out;
  for_each_fibonacci_subset(n, [&](FibonacciSubset s) { out.push_back(std::move(s)); });
  return out;
}

//! Lengths of the maximal runs {a, a+2, ...} contained in S, left to right.
inline std::vector<int> run_lengths(const FibonacciSubset& s)
{
  std::vector<int> runs;
  int current = 0;
  for (int a : odd_interior(s.n())) {
    if (s.contains(a)) {
      ++current;
    } else if (current > 0) {
      runs.push_back(current);
      current = 0;
    }
  }
  if (current > 0)
    runs.push_back(current);
  return runs;
}

//! A subset yields inclusion-maximal varieties iff it has no run of odd
//! length >= 3.
inline bool is_maximal(const FibonacciSubset& s)
{
  const auto runs = run_lengths(s);
  return std::none_of(runs.begin(), runs.end(), [](int m) { return m >= 3 && m % 2 == 1; });
}

//! All S-admissible sets. Left boundary choices (x_1 before x_2) vary
//! slowest, then right boundary choices (x_{2n} before x_{2n+1}).
inline std::vector<GeneratorSet> admissible_sets(const FibonacciSubset& s)
{
  const int n = s.n();
  if (n < 3)
    throw std::invalid_argument("admissible sets are defined for n >= 3");
  const int last = 2 * n - 1;

  std::vector<Generator> fixed;
  for (int a : s.members())
    fixed.push_back(Generator::variable(a));

  // Interior binomial positions, excluding the two boundary ones.
  for (int a = 5; a <= last - 2; a += 2) {
    const bool left = s.contains(a - 2);
    const bool right = s.contains(a + 2);
    if (left && right)
      continue;
    if (left)
      fixed.push_back(Generator::variable(a + 1));
    else if (right)
      fixed.push_back(Generator::variable(a - 1));
    else
      fixed.push_back(Generator::binomial(a));
  }

  std::vector<std::vector<Generator>> left_choices;
  if (!s.contains(3))
    left_choices = {{Generator::variable(1), Generator::variable(2)}};
  else if (s.contains(5))
    left_choices = {{Generator::variable(1)}, {Generator::variable(2)}};
  else
    left_choices = {{Generator::binomial(3)}};

  std::vector<std::vector<Generator>> right_choices;
  if (!s.contains(last))
    right_choices = {{Generator::variable(2 * n), Generator::variable(2 * n + 1)}};
  else if (s.contains(last - 2))
    right_choices = {{Generator::variable(2 * n)}, {Generator::variable(2 * n + 1)}};
  else
    right_choices = {{Generator::binomial(last)}};

  std::vector<GeneratorSet> out;
  for (const auto& l : left_choices) {
    for (const auto& r : right_choices) {
      GeneratorSet b{n, s, fixed};
      b.generators.insert(b.generators.end(), l.begin(), l.end());
      b.generators.insert(b.generators.end(), r.begin(), r.end());
      detail::normalize(b.generators);
      out.push_back(std::move(b));
    }
  }
  return out;
}

//! Closed-form size of every S-admissible set:
//! |S ∩ A_n| + n + 1 - |S ∩ (S + 4)|, with A_n the odd interior minus {3, 2n-1}.
inline int admissible_size_formula(const FibonacciSubset& s)
{
  const int n = s.n();
  int inner = 0;
  int shifted = 0;
  for (int a : s.members()) {
    if (a != 3 && a != 2 * n - 1)
      ++inner;
    if (s.contains(a - 4))
      ++shifted;
  }
  return inner + n + 1 - shifted;
}

//! Position of x_i in x_1 < x_3 < ... < x_{2n+1} < x_2 < x_4 < ... < x_{2n}.
inline int triangular_rank(int n, int i)
{
  return i % 2 == 1 ? (i - 1) / 2 : n + 1 + (i / 2 - 1);
}

//! Largest variable of a generator under triangular_rank.
inline int main_variable(int n, const Generator& g)
{
  if (g.is_variable())
    return g.index;
  int best = g.index - 2;
  for (int i : {g.index - 1, g.index + 1, g.index + 2})
    if (triangular_rank(n, i) > triangular_rank(n, best))
      best = i;
  return best;
}

inline bool is_triangular(const GeneratorSet& b)
{
  std::vector<int> mains;
  for (const auto& g : b.generators)
    mains.push_back(main_variable(b.n, g));
  std::sort(mains.begin(), mains.end());
  return std::adjacent_find(mains.begin(), mains.end()) == mains.end();
}

//! Number of components contributed by a maximal S.
inline int multiplicity(const FibonacciSubset& s)
{
  if (s.n() < 3)
    throw std::invalid_argument("multiplicity is defined for n >= 3");
  if (!is_maximal(s))
    throw std::invalid_argument("multiplicity requires a maximal subset");
  return static_cast<int>(admissible_sets(s).size());
}

//! 2^(a+b) with a = [{3,5} ⊆ S], b = [{2n-3,2n-1} ⊆ S]. Agrees with
//! multiplicity() for n >= 4; at n = 3 the two boundary pairs coincide.
inline int multiplicity_shortcut(const FibonacciSubset& s)
{
  const int n = s.n();
  const int a = s.contains(3) && s.contains(5) ? 1 : 0;
  const int b = s.contains(2 * n - 3) && s.contains(2 * n - 1) ? 1 : 0;
  return 1 << (a + b);
}

namespace detail {

inline std::vector<Component> small_components(int n)
{
  auto make = [n](std::vector<int> members, std::vector<Generator> gens) {
    detail::normalize(gens);
    return Component{GeneratorSet{n, FibonacciSubset(n, std::move(members)), std::move(gens)}};
  };
  using G = Generator;
  if (n == 1) {
    // Three coordinate axes of C^3.
    return {make({}, {G::variable(1), G::variable(2)}),
            make({}, {G::variable(1), G::variable(3)}),
            make({}, {G::variable(2), G::variable(3)})};
  }
  // n == 2: V(x1,x2,x4,x5) and V(x3, x1x2 + x4x5).
  return {make({}, {G::variable(1), G::variable(2), G::variable(4), G::variable(5)}),
          make({3}, {G::variable(3), G::binomial(3)})};
}

}  // namespace detail

//! Visits every irreducible component of the nullvariety of P_n^3.
template <typename Visitor>
void for_each_component(int n, Visitor&& visit)
{
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  if (n <= 2) {
    for (auto& c : detail::small_components(n))
      visit(std::move(c));
    return;
  }
  for_each_fibonacci_subset(n, [&](const FibonacciSubset& s) {
    if (!is_maximal(s))
      return;
    for (auto& b : admissible_sets(s))
      visit(Component{std::move(b)});
  });
}

inline std::vector<Component> components(int n)
{
  std::vector<Component> out;
  for_each_component(n, [&](Component c) { out.push_back(std::move(c)); });
  return out;
}

//! Hu-Ye geometric multiplicity of zero for k = 3:
//! sum over components of dim * 2^(dim - 1).
inline BigInt gm_zero(int n)
{
  BigInt total = 0;
  for_each_component(n, [&](const Component& c) {
    const int d = c.dim();
    total += BigInt(d) << (d - 1);
  });
  return total;
}

inline int max_component_dim(int n)
{
  int best = 0;
  for_each_component(n, [&](const Component& c) { best = std::max(best, c.dim()); });
  return best;
}

inline std::string render_generators(const std::vector<Generator>& gens)
{
  if (gens.empty())
    throw std::invalid_argument("cannot render an empty generator set");
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i)
      out += ',';
    out += gens[i].to_string();
  }
  return out + ">";
}

inline std::string render_ideal(const Component& c)
{
  return render_generators(c.generator_set.generators);
}

}  // namespace hypernull
