#pragma once

// Brute-force reference computations. None of these call into the library's
// own algorithms beyond reading the inputs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "krein/group.hpp"
#include "krein/linalg.hpp"
#include "krein/scheme.hpp"

namespace krein::oracle {

// Coefficients c_0..c_n of det(tI - A), leading first, by Faddeev-LeVerrier.
// Exact in integers: each trace is divisible by its step index.
inline std::vector<std::int64_t> characteristic_polynomial(const IntMatrix& a) {
  const Eigen::Index n = a.rows();
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = 1;
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + IntMatrix::Identity(n, n) * c[k - 1];
    const std::int64_t tr = (a * m).trace();
    c[k] = -tr / k;
  }
  return c;
}

// Integer roots with multiplicities, by repeated synthetic division. Only
// integers in [-bound, bound] are tried.
inline std::map<std::int64_t, int> integer_roots(std::vector<std::int64_t> poly, std::int64_t bound) {
  std::map<std::int64_t, int> roots;
  for (std::int64_t r = -bound; r <= bound; ++r) {
    for (;;) {
      if (poly.size() < 2) break;
      std::vector<std::int64_t> q(poly.size() - 1);
      std::int64_t acc = 0;
      for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        acc = acc * r + poly[i];
        q[i] = acc;
      }
      if (acc * r + poly.back() != 0) break;
      roots[r] += 1;
      poly = std::move(q);
    }
  }
  return roots;
}

inline std::vector<int> conjugacy_class_sizes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<int> sizes;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (int h = 0; h < g.order(); ++h) {
      int hinv = 0;
      while (g.mul(h, hinv) != g.identity()) ++hinv;
      cls.insert(g.mul(g.mul(h, x), hinv));
    }
    for (int y : cls) seen[y] = true;
    sizes.push_back(static_cast<int>(cls.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Number of orbits of the group generated by `gens` on ordered pairs.
inline int pair_orbit_count(const std::vector<Permutation>& gens, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n) * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) parent[find(x * n + y)] = find(g[x] * n + g[y]);
  std::set<int> roots;
  for (int i = 0; i < n * n; ++i) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

// All d-dimensional subspaces of GF(p)^v for prime p, each as the sorted set
// of its vectors (encoded base p), found by closing the spans of
// exhaustive d-tuples.
inline std::vector<std::vector<int>> prime_field_subspaces(int p, int v, int d) {
  int total = 1;
  for (int i = 0; i < v; ++i) total *= p;
  auto add = [&](int a, int b, int scale) {
    int out = 0, place = 1;
    for (int i = 0; i < v; ++i) {
      out += ((a % p + scale * (b % p)) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return out;
  };
  std::set<std::vector<int>> found;
  // enumerate d-tuples of vectors, keep spans of exact size p^d
  std::vector<int> idx(d, 1);
  int target = 1;
  for (int i = 0; i < d; ++i) target *= p;
  for (;;) {
    std::set<int> span{0};
    for (int b : idx) {
      std::set<int> next;
      for (int s : span)
        for (int c = 0; c < p; ++c) next.insert(add(s, b, c));
      span = std::move(next);
    }
    if (static_cast<int>(span.size()) == target) found.insert(std::vector<int>(span.begin(), span.end()));
    int pos = 0;
    while (pos < d && ++idx[pos] == total) idx[pos++] = 1;
    if (pos == d) break;
  }
  return {found.begin(), found.end()};
}

// Class of each pair of subspaces: d - dim(intersection).
inline std::vector<std::vector<int>> subspace_relation(const std::vector<std::vector<int>>& subs, int p,
                                                       int d) {
  const int n = static_cast<int>(subs.size());
  std::vector<std::vector<int>> rel(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> common;
      std::set_intersection(subs[a].begin(), subs[a].end(), subs[b].begin(), subs[b].end(),
                            std::back_inserter(common));
      int dim = 0;
      for (std::size_t s = common.size(); s > 1; s /= p) ++dim;
      rel[a][b] = d - dim;
    }
  return rel;
}

// Sorted multiset of per-class row counts of a relation matrix; invariant
// under relabelling vertices.
inline std::vector<std::vector<int>> row_profiles(const std::vector<std::vector<int>>& rel, int classes) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : rel) {
    std::vector<int> counts(classes, 0);
    for (int c : r) counts[c] += 1;
    rows.push_back(counts);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

// p_ij^k read off the integer matrix product A_i A_j at one pair of R_k.
inline std::int64_t intersection_by_product(const AssociationScheme& s, int i, int j, int k) {
  const IntMatrix prod = s.adjacency(i) * s.adjacency(j);
  for (int x = 0; x < s.n(); ++x)
    for (int y = 0; y < s.n(); ++y)
      if (s.relation(x, y) == k) return prod(x, y);
  return -1;
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace krein::oracle
