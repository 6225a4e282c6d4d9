// brauer - diagram semigroups and complexity bounds

#include "brauer/green.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace brauer {

  namespace {

    constexpr std::size_t NONE = static_cast<std::size_t>(-1);

    struct Components {
      std::vector<std::size_t> comp;
      std::size_t              count = 0;
    };

    // Iterative Tarjan. Components are numbered in order of completion, so
    // an edge between distinct components always points to a smaller number.
    template <typename Succ>
    Components strongly_connected(std::size_t N, std::size_t degree, Succ succ) {
      Components                                    out;
      std::vector<std::size_t>                      index(N, NONE), low(N, 0);
      std::vector<bool>                             on_stack(N, false);
      std::vector<std::size_t>                      stack;
      std::vector<std::pair<std::size_t, std::size_t>> calls;
      std::size_t                                   counter = 0;
      out.comp.assign(N, NONE);

      auto visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        calls.emplace_back(v, 0);
      };

      for (std::size_t root = 0; root < N; ++root) {
        if (index[root] != NONE) {
          continue;
        }
        visit(root);
        while (!calls.empty()) {
          auto& [v, i] = calls.back();
          if (i < degree) {
            std::size_t w = succ(v, i++);
            if (index[w] == NONE) {
              visit(w);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], index[w]);
            }
            continue;
          }
          std::size_t const u = v;
          calls.pop_back();
          if (low[u] == index[u]) {
            std::size_t w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              out.comp[w] = out.count;
            } while (w != u);
            ++out.count;
          }
          if (!calls.empty()) {
            auto& parent = calls.back().first;
            low[parent]  = std::min(low[parent], low[u]);
          }
        }
      }
      return out;
    }

    std::vector<bool> reachable_left(Semigroup const& s, id_type b) {
      std::vector<bool>    seen(s.size(), false);
      std::vector<id_type> queue{b};
      seen[b] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (std::size_t g = 0; g < s.num_generators(); ++g) {
          id_type c = s.left(queue[i], g);
          if (!seen[c]) {
            seen[c] = true;
            queue.push_back(c);
          }
        }
      }
      return seen;
    }

    bool generates(Semigroup const& s, std::vector<id_type> const& gens) {
      return !gens.empty() && closure_ids(s, gens).size() == s.size();
    }

  }  // namespace

  GreenData green(Semigroup const& s) {
    std::size_t const N = s.size();
    std::size_t const G = s.num_generators();
    GreenData         out;

    auto r = strongly_connected(
        N, G, [&](std::size_t v, std::size_t g) { return s.right(v, g); });
    auto l = strongly_connected(
        N, G, [&](std::size_t v, std::size_t g) { return s.left(v, g); });
    auto j = strongly_connected(N, 2 * G, [&](std::size_t v, std::size_t g) {
      return g < G ? s.right(v, g) : s.left(v, g - G);
    });

    out.r_class = std::move(r.comp);
    out.num_r   = r.count;
    out.l_class = std::move(l.comp);
    out.num_l   = l.count;
    out.j_class = std::move(j.comp);
    out.num_j   = j.count;

    std::unordered_map<std::uint64_t, std::size_t> h_index;
    out.h_class.resize(N);
    for (std::size_t a = 0; a < N; ++a) {
      std::uint64_t key = static_cast<std::uint64_t>(out.r_class[a]) * out.num_l
                          + out.l_class[a];
      auto [it, inserted] = h_index.emplace(key, h_index.size());
      out.h_class[a]      = it->second;
    }
    out.num_h = h_index.size();
    out.h_size.assign(out.num_h, 0);
    for (std::size_t a = 0; a < N; ++a) {
      ++out.h_size[out.h_class[a]];
    }

    out.j_members.assign(out.num_j, {});
    out.j_below.assign(out.num_j, {});
    for (std::size_t a = 0; a < N; ++a) {
      std::size_t c = out.j_class[a];
      out.j_members[c].push_back(static_cast<id_type>(a));
      for (std::size_t g = 0; g < G; ++g) {
        for (id_type b : {s.right(a, g), s.left(a, g)}) {
          if (out.j_class[b] != c) {
            out.j_below[c].push_back(out.j_class[b]);
          }
        }
      }
    }
    for (auto& below : out.j_below) {
      std::sort(below.begin(), below.end());
      below.erase(std::unique(below.begin(), below.end()), below.end());
    }

    out.j_regular.assign(out.num_j, false);
    out.j_max_subgroup.assign(out.num_j, 0);
    out.j_essential.assign(out.num_j, false);
    for (std::size_t a = 0; a < N; ++a) {
      std::size_t c = out.j_class[a];
      if (!out.j_regular[c] && is_idempotent(s, static_cast<id_type>(a))) {
        out.j_regular[c]      = true;
        out.j_max_subgroup[c] = out.h_size[out.h_class[a]];
        out.j_essential[c]    = out.j_max_subgroup[c] > 1;
      }
    }
    return out;
  }

  bool is_idempotent(Semigroup const& s, id_type a) {
    return s.product(a, a) == a;
  }

  std::pair<std::size_t, std::size_t> index_period(Semigroup const& s,
                                                   id_type          a) {
    std::unordered_map<id_type, std::size_t> seen;
    id_type                                  x = a;
    for (std::size_t k = 1;; ++k) {
      auto [it, inserted] = seen.emplace(x, k);
      if (!inserted) {
        return {it->second, k - it->second};
      }
      x = s.product(x, a);
    }
  }

  bool is_aperiodic(Semigroup const& s, GreenData const& g) {
    bool by_h = std::all_of(
        g.h_size.begin(), g.h_size.end(), [](std::size_t k) { return k == 1; });
    bool by_period = true;
    for (id_type a = 0; a < s.size() && by_period; ++a) {
      by_period = index_period(s, a).second == 1;
    }
    if (by_h != by_period) {
      throw Error("aperiodicity tests disagree");
    }
    return by_h;
  }

  bool is_aperiodic(Semigroup const& s) {
    return is_aperiodic(s, green(s));
  }

  std::size_t essential_depth(GreenData const& g) {
    std::vector<std::size_t> best(g.num_j, 0);
    std::size_t              depth = 0;
    for (std::size_t c = 0; c < g.num_j; ++c) {
      std::size_t below = 0;
      for (auto d : g.j_below[c]) {
        below = std::max(below, best[d]);
      }
      best[c] = below + (g.j_essential[c] ? 1 : 0);
      depth   = std::max(depth, best[c]);
    }
    return depth;
  }

  std::size_t essential_depth(Semigroup const& s) {
    return essential_depth(green(s));
  }

  std::vector<id_type> idempotents(Semigroup const& s) {
    std::vector<id_type> out;
    for (id_type a = 0; a < s.size(); ++a) {
      if (is_idempotent(s, a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  // The units are the H-class of the identity.
  std::vector<id_type> units(Semigroup const& s) {
    auto e = s.identity();
    if (!e) {
      throw NotAMonoid("the semigroup has no identity");
    }
    auto const           g = green(s);
    std::vector<id_type> out;
    for (id_type a = 0; a < s.size(); ++a) {
      if (g.h_class[a] == g.h_class[*e]) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<id_type> singular_part(Semigroup const& s) {
    auto              u = units(s);
    std::vector<bool> is_unit(s.size(), false);
    for (auto a : u) {
      is_unit[a] = true;
    }
    std::vector<id_type> out;
    for (id_type a = 0; a < s.size(); ++a) {
      if (!is_unit[a]) {
        out.push_back(a);
      }
    }
    return out;
  }

  SemigroupPtr idempotent_generated(SemigroupPtr const& s) {
    return Semigroup::generated(s, idempotents(*s));
  }

  SemigroupPtr local_monoid(SemigroupPtr const& s, id_type e) {
    if (!is_idempotent(*s, e)) {
      throw NotIdempotent("local monoid of a non-idempotent element");
    }
    std::vector<bool>    seen(s->size(), false);
    std::vector<id_type> ids{e};
    seen[e] = true;
    for (id_type x = 0; x < s->size(); ++x) {
      id_type y = s->product(s->product(e, x), e);
      if (!seen[y]) {
        seen[y] = true;
        ids.push_back(y);
      }
    }
    return Semigroup::induced(s, ids);
  }

  std::vector<id_type> principal_ideal(Semigroup const& s, id_type e) {
    std::vector<bool>    seen(s.size(), false);
    std::vector<id_type> out{e};
    seen[e] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t g = 0; g < s.num_generators(); ++g) {
        for (id_type b : {s.right(out[i], g), s.left(out[i], g)}) {
          if (!seen[b]) {
            seen[b] = true;
            out.push_back(b);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void check_ideal(Semigroup const& s, std::vector<id_type> const& ideal) {
    std::vector<bool> in(s.size(), false);
    for (auto a : ideal) {
      in[a] = true;
    }
    for (auto a : ideal) {
      for (std::size_t g = 0; g < s.num_generators(); ++g) {
        if (!in[s.right(a, g)] || !in[s.left(a, g)]) {
          throw NotAnIdeal("the set is not closed under multiplication by "
                           "the generator with index "
                           + std::to_string(g));
        }
      }
    }
  }

  SemigroupPtr rees_quotient(Semigroup const&            s,
                             std::vector<id_type> const& ideal) {
    if (ideal.empty()) {
      throw NotAnIdeal("the empty set is not an ideal");
    }
    check_ideal(s, ideal);
    std::vector<id_type> image(s.size(), 0);
    std::vector<bool>    in(s.size(), false);
    for (auto a : ideal) {
      in[a] = true;
    }
    std::vector<id_type>     reps;
    std::vector<std::string> names{"0"};
    for (id_type a = 0; a < s.size(); ++a) {
      if (!in[a]) {
        reps.push_back(a);
        image[a] = static_cast<id_type>(reps.size());
        names.push_back(s.element_name(a));
      }
    }
    std::size_t const    M = reps.size() + 1;
    std::vector<id_type> table(M * M, 0);
    for (std::size_t x = 1; x < M; ++x) {
      for (std::size_t y = 1; y < M; ++y) {
        table[x * M + y] = image[s.product(reps[x - 1], reps[y - 1])];
      }
    }
    return Semigroup::from_table(table, names);
  }

  bool is_inverse(Semigroup const& s) {
    auto g = green(s);
    if (!std::all_of(g.j_regular.begin(), g.j_regular.end(), [](bool b) {
          return b;
        })) {
      return false;
    }
    auto e = idempotents(s);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (s.product(e[i], e[j]) != s.product(e[j], e[i])) {
          return false;
        }
      }
    }
    return true;
  }

  bool l_leq(Semigroup const& s, id_type a, id_type b) {
    return a == b || reachable_left(s, b)[a];
  }

  std::optional<std::vector<id_type>> t1_chain(Semigroup const&            s,
                                               std::vector<id_type> const& pool) {
    std::vector<id_type> chain = pool.empty() ? s.generators() : pool;
    std::sort(chain.begin(), chain.end());
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    if (!generates(s, chain)) {
      return std::nullopt;
    }

    std::unordered_map<id_type, std::vector<bool>> below;
    auto leq = [&](id_type a, id_type b) {
      auto it = below.find(b);
      if (it == below.end()) {
        it = below.emplace(b, reachable_left(s, b)).first;
      }
      return a == b || it->second[a];
    };
    auto total = [&](std::vector<id_type> const& c) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          if (!leq(c[i], c[j]) && !leq(c[j], c[i])) {
            return false;
          }
        }
      }
      return true;
    };

    if (!total(chain)) {
      for (std::size_t i = chain.size(); i-- > 0;) {
        std::vector<id_type> smaller = chain;
        smaller.erase(smaller.begin() + i);
        if (generates(s, smaller)) {
          chain = std::move(smaller);
        }
      }
      if (!total(chain)) {
        return std::nullopt;
      }
    }
    // Count the elements below each member; ≤_L is then a sort by count.
    std::unordered_map<id_type, std::size_t> weight;
    for (auto b : chain) {
      leq(b, b);
      weight[b] = static_cast<std::size_t>(
          std::count(below[b].begin(), below[b].end(), true));
    }
    std::stable_sort(chain.begin(), chain.end(), [&](id_type a, id_type b) {
      return weight[a] < weight[b];
    });
    return chain;
  }

}  // namespace brauer
