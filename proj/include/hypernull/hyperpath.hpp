#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hypernull {

//! Loose k-uniform hyperpath with n edges. Vertices are labelled 1..(k-1)n+1
//! and edge j (1-based) is {(k-1)(j-1)+1, ..., (k-1)j+1}.
struct Hyperpath
{
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> edges;

  int vertex_count() const { return (k - 1) * n + 1; }

  int degree(int v) const
  {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const auto& e) {
      return std::find(e.begin(), e.end(), v) != e.end();
    }));
  }

  //! Terms of the link polynomial of v: one vertex list per edge through v,
  //! with v removed.
  std::vector<std::vector<int>> link_terms(int v) const
  {
    std::vector<std::vector<int>> terms;
    for (const auto& e : edges) {
      if (std::find(e.begin(), e.end(), v) == e.end())
        continue;
      std::vector<int> rest;
      std::copy_if(e.begin(), e.end(), std::back_inserter(rest), [v](int w) { return w != v; });
      terms.push_back(std::move(rest));
    }
    return terms;
  }
};

inline Hyperpath build_hyperpath(int n, int k)
{
  if (n < 1)
    throw std::invalid_argument("hyperpath needs at least one edge");
  if (k < 3)
    throw std::invalid_argument("hyperpath uniformity must be at least 3");

  Hyperpath h{n, k, {}};
  h.edges.reserve(n);
  for (int j = 1; j <= n; ++j) {
    std::vector<int> e(k);
    const int first = (k - 1) * (j - 1) + 1;
    for (int t = 0; t < k; ++t)
      e[t] = first + t;
    h.edges.push_back(std::move(e));
  }
  return h;
}

using IndexPair = std::pair<int, int>;

//! Link monomials x_i x_j of the degree-one vertices of a 3-uniform hyperpath,
//! in vertex order. Each pair is stored with i < j.
inline std::vector<IndexPair> degree_one_links(const Hyperpath& h)
{
  if (h.k != 3)
    throw std::invalid_argument("degree-one link monomials are defined for k = 3 only");
  std::vector<IndexPair> links;
  for (int v = 1; v <= h.vertex_count(); ++v) {
    if (h.degree(v) != 1)
      continue;
    const auto terms = h.link_terms(v);
    const auto& t = terms.front();
    links.emplace_back(std::min(t[0], t[1]), std::max(t[0], t[1]));
  }
  return links;
}

//! Graph on variable indices whose edges are the degree-one link monomials.
//! Its vertex covers are exactly the ways of killing every such monomial.
struct AuxGraph
{
  std::set<int> vertices;
  std::vector<IndexPair> edges;
};

inline AuxGraph aux_graph(int n)
{
  if (n < 3)
    throw std::invalid_argument("auxiliary graph is defined for n >= 3");
  AuxGraph g;
  g.edges = degree_one_links(build_hyperpath(n, 3));
  for (const auto& [i, j] : g.edges) {
    g.vertices.insert(i);
    g.vertices.insert(j);
  }
  return g;
}

}  // namespace hypernull
