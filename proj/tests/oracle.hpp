// Independent reference implementations used by the tests. Nothing here
// calls into the library's algorithms; diagrams are only converted to and
// from plain label vectors.

#ifndef BRAUER_TESTS_ORACLE_HPP_
#define BRAUER_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "brauer/diagram.hpp"

namespace oracle {

  using brauer::Diagram;

  // Relabels by order of first appearance.
  inline std::vector<std::uint32_t> canonical(std::vector<std::uint32_t> const& raw) {
    std::map<std::uint32_t, std::uint32_t> seen;
    std::vector<std::uint32_t>             out;
    for (auto x : raw) {
      auto it = seen.emplace(x, static_cast<std::uint32_t>(seen.size())).first;
      out.push_back(it->second);
    }
    return out;
  }

  inline std::vector<std::uint32_t> labels_of(Diagram const& a) {
    return {a.labels().begin(), a.labels().end()};
  }

  inline Diagram from_labels(std::size_t n, std::vector<std::uint32_t> const& raw) {
    return Diagram::from_labels(n, raw);
  }

  // Product by explicit graph search on the 3n points: a's bottom row,
  // the shared middle row and b's top row.
  inline Diagram product(Diagram const& a, Diagram const& b) {
    std::size_t const                    n = a.degree();
    std::vector<std::vector<std::size_t>> adj(3 * n);
    auto join = [&](Diagram const& d, std::size_t offset) {
      for (std::size_t p = 0; p < 2 * n; ++p) {
        for (std::size_t q = p + 1; q < 2 * n; ++q) {
          if (d.label(p) == d.label(q)) {
            adj[offset + p].push_back(offset + q);
            adj[offset + q].push_back(offset + p);
          }
        }
      }
    };
    join(a, 0);
    join(b, n);
    std::vector<std::uint32_t> comp(3 * n, UINT32_MAX);
    std::uint32_t              next = 0;
    for (std::size_t s = 0; s < 3 * n; ++s) {
      if (comp[s] != UINT32_MAX) {
        continue;
      }
      std::vector<std::size_t> stack{s};
      comp[s] = next;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v]) {
          if (comp[w] == UINT32_MAX) {
            comp[w] = next;
            stack.push_back(w);
          }
        }
      }
      ++next;
    }
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(comp[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(comp[2 * n + i]);
    }
    return from_labels(n, out);
  }

  inline std::size_t double_factorial_odd(std::size_t n) {
    std::size_t r = 1;
    for (std::size_t k = 2 * n - 1; k > 1; k -= 2) {
      r *= k;
    }
    return r;
  }

  inline std::size_t catalan(std::size_t n) {
    // C_{m+1} = C_m * 2(2m+1)/(m+2)
    std::size_t c = 1;
    for (std::size_t m = 0; m < n; ++m) {
      c = c * 2 * (2 * m + 1) / (m + 2);
    }
    return c;
  }

  // Number of partial matchings (involutions) of m points.
  inline std::size_t involutions(std::size_t m) {
    std::size_t a = 1, b = 1;  // a(0), a(1)
    if (m == 0) {
      return 1;
    }
    for (std::size_t k = 2; k <= m; ++k) {
      std::size_t c = b + (k - 1) * a;
      a             = b;
      b             = c;
    }
    return b;
  }

  inline std::size_t bell(std::size_t m) {
    std::vector<std::size_t> row{1};
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<std::size_t> next{row.back()};
      for (auto x : row) {
        next.push_back(next.back() + x);
      }
      row = next;
    }
    return row.front();
  }

  // Point p in 0..2n-1 (bottom then top) to its place on the boundary walk
  // bottom 1..n, top n..1.
  inline std::size_t boundary(std::size_t n, std::size_t p) {
    return p < n ? p : 3 * n - 1 - p;
  }

  // All partial matchings of 2n points as diagrams; perfect only if asked.
  inline void matchings_rec(std::size_t                 n,
                            bool                        perfect,
                            std::vector<std::uint32_t>& lab,
                            std::vector<bool>&          used,
                            std::uint32_t               next,
                            std::vector<Diagram>&       out) {
    std::size_t p = 0;
    while (p < 2 * n && used[p]) {
      ++p;
    }
    if (p == 2 * n) {
      out.push_back(from_labels(n, lab));
      return;
    }
    used[p] = true;
    lab[p]  = next;
    if (!perfect) {
      matchings_rec(n, perfect, lab, used, next + 1, out);
    }
    for (std::size_t q = p + 1; q < 2 * n; ++q) {
      if (!used[q]) {
        used[q] = true;
        lab[q]  = next;
        matchings_rec(n, perfect, lab, used, next + 1, out);
        used[q] = false;
      }
    }
    used[p] = false;
  }

  inline std::vector<Diagram> matchings(std::size_t n, bool perfect) {
    std::vector<std::uint32_t> lab(2 * n, 0);
    std::vector<bool>          used(2 * n, false);
    std::vector<Diagram>       out;
    matchings_rec(n, perfect, lab, used, 0, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Non-crossing test on the boundary walk by comparing every pair of
  // 2-blocks; singletons never cross.
  inline bool non_crossing(Diagram const& a) {
    std::size_t const                        n = a.degree();
    std::vector<std::pair<std::size_t, std::size_t>> chords;
    for (std::size_t p = 0; p < 2 * n; ++p) {
      for (std::size_t q = p + 1; q < 2 * n; ++q) {
        if (a.label(p) == a.label(q)) {
          auto x = boundary(n, p), y = boundary(n, q);
          chords.emplace_back(std::min(x, y), std::max(x, y));
        }
      }
    }
    for (auto [p, q] : chords) {
      for (auto [r, s] : chords) {
        if (p < r && r < q && q < s) {
          return false;
        }
      }
    }
    return true;
  }

  // Non-crossing perfect matchings generated directly: the first boundary
  // position pairs with an odd offset, splitting the rest into an inside
  // and an outside run.
  inline void noncrossing_rec(std::vector<std::size_t> const&               run,
                              std::vector<std::pair<std::size_t, std::size_t>>& acc,
                              std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out,
                              std::vector<std::vector<std::size_t>>          rest) {
    if (run.empty()) {
      if (rest.empty()) {
        out.push_back(acc);
        return;
      }
      auto next = rest.back();
      rest.pop_back();
      noncrossing_rec(next, acc, out, rest);
      return;
    }
    for (std::size_t k = 1; k < run.size(); k += 2) {
      acc.emplace_back(run[0], run[k]);
      std::vector<std::size_t> inside(run.begin() + 1, run.begin() + k);
      std::vector<std::size_t> outside(run.begin() + k + 1, run.end());
      auto more = rest;
      more.push_back(outside);
      noncrossing_rec(inside, acc, out, more);
      acc.pop_back();
    }
  }

  inline std::vector<Diagram> noncrossing_matchings(std::size_t n) {
    // Boundary walk position w to point index: bottom 1..n, then top n..1.
    std::vector<std::size_t> walk(2 * n);
    std::iota(walk.begin(), walk.end(), 0);
    std::vector<std::pair<std::size_t, std::size_t>>              acc;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> all;
    noncrossing_rec(walk, acc, all, {});
    std::vector<Diagram> out;
    for (auto const& m : all) {
      std::vector<std::uint32_t> lab(2 * n);
      std::uint32_t              next = 0;
      for (auto [x, y] : m) {
        auto point = [n](std::size_t w) { return w < n ? w : 3 * n - 1 - w; };
        lab[point(x)] = next;
        lab[point(y)] = next++;
      }
      out.push_back(from_labels(n, lab));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline std::size_t rank(Diagram const& a) {
    std::size_t const        n = a.degree();
    std::vector<std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = n; j < 2 * n; ++j) {
        if (a.label(i) == a.label(j)
            && std::find(seen.begin(), seen.end(), a.label(i)) == seen.end()) {
          seen.push_back(a.label(i));
        }
      }
    }
    return seen.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // Random generators
  ////////////////////////////////////////////////////////////////////////

  inline Diagram random_partition(std::size_t n, std::mt19937& rng) {
    // Random restricted growth string (not uniform, but covers all shapes).
    std::vector<std::uint32_t> lab(2 * n);
    std::uint32_t              blocks = 0;
    for (auto& x : lab) {
      x = std::uniform_int_distribution<std::uint32_t>(0, blocks)(rng);
      blocks += x == blocks;
    }
    return from_labels(n, lab);
  }

  inline Diagram random_matching(std::size_t n, std::mt19937& rng, bool perfect) {
    std::vector<std::uint32_t> pts(2 * n);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<std::uint32_t> lab(2 * n);
    std::size_t                i    = 0;
    std::uint32_t              next = 0;
    std::bernoulli_distribution single(0.25);
    while (i < pts.size()) {
      if (!perfect && (i + 1 == pts.size() || single(rng))) {
        lab[pts[i++]] = next++;
      } else {
        lab[pts[i++]] = next;
        lab[pts[i++]] = next++;
      }
    }
    return from_labels(n, lab);
  }

  template <typename T>
  T const& pick(std::vector<T> const& v, std::mt19937& rng) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  }

}  // namespace oracle

#endif  // BRAUER_TESTS_ORACLE_HPP_
