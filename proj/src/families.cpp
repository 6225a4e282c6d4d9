// brauer - diagram semigroups and complexity bounds

#include "brauer/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

namespace brauer {

  namespace {

    constexpr std::uint8_t FREE = 0xFF;

    void check_budget(std::size_t count, std::size_t budget) {
      if (count > budget) {
        throw BudgetExceeded("family exceeds the budget of "
                             + std::to_string(budget) + " elements");
      }
    }

    // Matchings of 2n points in which every point is paired (perfect) or
    // points may be left alone (partial).
    void matchings(std::size_t                        n,
                   bool                               partial,
                   std::size_t                        budget,
                   std::array<std::uint8_t, 2 * MAX_DEGREE>& labels,
                   std::uint8_t                       next,
                   std::vector<Diagram>&              out) {
      std::size_t p = 0;
      while (p < 2 * n && labels[p] != FREE) {
        ++p;
      }
      if (p == 2 * n) {
        out.push_back(Diagram::from_small_labels(n, labels.data()));
        check_budget(out.size(), budget);
        return;
      }
      labels[p] = next;
      if (partial) {
        matchings(n, partial, budget, labels, next + 1, out);
      }
      for (std::size_t q = p + 1; q < 2 * n; ++q) {
        if (labels[q] == FREE) {
          labels[q] = next;
          matchings(n, partial, budget, labels, next + 1, out);
          labels[q] = FREE;
        }
      }
      labels[p] = FREE;
    }

    // Restricted growth strings on 2n points.
    void set_partitions(std::size_t                        n,
                        std::size_t                        budget,
                        std::array<std::uint8_t, 2 * MAX_DEGREE>& labels,
                        std::size_t                        pos,
                        std::uint8_t                       used,
                        std::vector<Diagram>&              out) {
      if (pos == 2 * n) {
        out.push_back(Diagram::from_small_labels(n, labels.data()));
        check_budget(out.size(), budget);
        return;
      }
      for (std::uint8_t l = 0; l <= used; ++l) {
        labels[pos] = l;
        set_partitions(
            n, budget, labels, pos + 1, l == used ? used + 1 : used, out);
      }
    }

    std::vector<Diagram> all_permutations(std::size_t n, std::size_t budget) {
      std::vector<std::size_t> images(n);
      std::iota(images.begin(), images.end(), 1);
      std::vector<Diagram> out;
      do {
        out.push_back(embed_permutation(n, images));
        check_budget(out.size(), budget);
      } while (std::next_permutation(images.begin(), images.end()));
      return out;
    }

    template <typename Pred>
    std::vector<Diagram> filtered(std::vector<Diagram> const& in, Pred pred) {
      std::vector<Diagram> out;
      std::copy_if(in.begin(), in.end(), std::back_inserter(out), pred);
      return out;
    }

    bool is_even_like(Diagram const& a) {
      auto p = parity(a);
      return p == Parity::Even || p == Parity::RankZero;
    }

    std::vector<Diagram> natural_generators(FamilyId f, std::size_t n) {
      std::vector<Diagram> out;
      auto                 id = identity(n);
      switch (f) {
        case FamilyId::SYM:
          out = symmetric_generators(n);
          break;
        case FamilyId::B:
          out = symmetric_generators(n);
          if (n >= 2) {
            out.push_back(gamma_pair(n, 1, 2));
          }
          break;
        case FamilyId::J:
          out.push_back(id);
          for (std::size_t i = 1; i < n; ++i) {
            out.push_back(gamma_cyc(n, i));
          }
          break;
        case FamilyId::A:
          out = {zeta(n), id};
          if (n >= 2) {
            out.insert(out.begin() + 1, gamma_cyc(n, 1));
          }
          break;
        case FamilyId::EA:
          out = {id, zeta_power(n, 2)};
          for (std::size_t i = 1; n >= 2 && i <= n; ++i) {
            out.push_back(gamma_cyc(n, i));
          }
          break;
        case FamilyId::PB:
        case FamilyId::C:
          out = symmetric_generators(n);
          if (n >= 2) {
            out.push_back(gamma_pair(n, 1, 2));
          }
          out.push_back(sigma(n, 1));
          break;
        case FamilyId::PJ:
          out.push_back(id);
          for (std::size_t i = 1; i < n; ++i) {
            out.push_back(gamma_cyc(n, i));
          }
          for (std::size_t i = 1; i <= n; ++i) {
            out.push_back(sigma(n, i));
          }
          break;
        case FamilyId::PA:
          out = {zeta(n), id};
          if (n >= 2) {
            out.insert(out.begin() + 1, gamma_cyc(n, 1));
          }
          out.push_back(sigma(n, 1));
          break;
      }
      return out;
    }

    void sort_unique(std::vector<Diagram>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }

  }  // namespace

  char const* to_string(FamilyId f) {
    switch (f) {
      case FamilyId::C:
        return "C";
      case FamilyId::B:
        return "B";
      case FamilyId::PB:
        return "PB";
      case FamilyId::J:
        return "J";
      case FamilyId::PJ:
        return "PJ";
      case FamilyId::A:
        return "A";
      case FamilyId::PA:
        return "PA";
      case FamilyId::EA:
        return "EA";
      case FamilyId::SYM:
        return "SYM";
    }
    return "?";
  }

  char const* to_string(Strategy s) {
    switch (s) {
      case Strategy::Generated:
        return "generated";
      case Strategy::Enumerated:
        return "enumerated";
      case Strategy::RotatedPlanar:
        return "rotated-planar";
    }
    return "?";
  }

  FamilyId family_from_string(std::string_view name) {
    for (auto f : all_families()) {
      if (name == to_string(f)) {
        return f;
      }
    }
    throw BadIndex("unknown family '" + std::string(name) + "'");
  }

  Strategy strategy_from_string(std::string_view name) {
    for (auto s :
         {Strategy::Generated, Strategy::Enumerated, Strategy::RotatedPlanar}) {
      if (name == to_string(s)) {
        return s;
      }
    }
    throw BadIndex("unknown strategy '" + std::string(name) + "'");
  }

  std::vector<FamilyId> all_families() {
    return {FamilyId::C,
            FamilyId::B,
            FamilyId::PB,
            FamilyId::J,
            FamilyId::PJ,
            FamilyId::A,
            FamilyId::PA,
            FamilyId::EA,
            FamilyId::SYM};
  }

  std::vector<Diagram> symmetric_generators(std::size_t n) {
    if (n == 1) {
      return {identity(1)};
    }
    std::vector<std::size_t> swap(n);
    std::iota(swap.begin(), swap.end(), 1);
    std::swap(swap[0], swap[1]);
    auto t = embed_permutation(n, swap);
    auto z = zeta(n);
    if (t == z) {
      return {t};
    }
    return {t, z};
  }

  std::vector<Diagram> all_brauer(std::size_t n) {
    std::array<std::uint8_t, 2 * MAX_DEGREE> labels;
    labels.fill(FREE);
    std::vector<Diagram> out;
    matchings(n, false, static_cast<std::size_t>(-1), labels, 0, out);
    return out;
  }

  std::vector<Diagram> all_partial_brauer(std::size_t n, std::size_t budget) {
    std::array<std::uint8_t, 2 * MAX_DEGREE> labels;
    labels.fill(FREE);
    std::vector<Diagram> out;
    matchings(n, true, budget, labels, 0, out);
    return out;
  }

  FamilyInstance construct(FamilyId f, std::size_t n, std::size_t budget) {
    if (n < 1 || n > MAX_DEGREE) {
      throw BadDegree("degree must lie in 1.." + std::to_string(MAX_DEGREE));
    }
    FamilyInstance out{f, n, Strategy::Enumerated, natural_generators(f, n), {}};
    switch (f) {
      case FamilyId::SYM:
        out.elements = all_permutations(n, budget);
        break;
      case FamilyId::B:
      case FamilyId::J:
      case FamilyId::A:
        out.strategy = Strategy::Generated;
        out.elements = Semigroup::closure(out.generators, budget)->diagrams();
        break;
      case FamilyId::EA:
        if (n % 2 != 0) {
          throw BadDegree("the even annular monoid needs an even degree");
        }
        out.elements = filtered(construct(FamilyId::A, n, budget).elements,
                                is_even_like);
        break;
      case FamilyId::PB:
        out.elements = all_partial_brauer(n, budget);
        break;
      case FamilyId::PJ:
        out.elements = filtered(all_partial_brauer(n, budget),
                                [](Diagram const& a) { return is_planar(a); });
        break;
      case FamilyId::PA: {
        out.strategy = Strategy::RotatedPlanar;
        auto planar  = construct(FamilyId::PJ, n, budget).elements;
        std::vector<Diagram> rot;
        for (std::size_t a = 0; a < n; ++a) {
          rot.push_back(zeta_power(n, static_cast<long>(a)));
        }
        std::unordered_set<Diagram, DiagramHash> seen;
        for (auto const& beta : planar) {
          for (auto const& za : rot) {
            auto left = za * beta;
            for (auto const& zb : rot) {
              if (seen.insert(left * zb).second) {
                check_budget(seen.size(), budget);
              }
            }
          }
        }
        out.elements.assign(seen.begin(), seen.end());
        break;
      }
      case FamilyId::C: {
        if (n > MAX_PARTITION_DEGREE) {
          throw BadDegree("the partition monoid is built only up to degree "
                          + std::to_string(MAX_PARTITION_DEGREE));
        }
        std::array<std::uint8_t, 2 * MAX_DEGREE> labels{};
        set_partitions(n, budget, labels, 0, 0, out.elements);
        break;
      }
    }
    sort_unique(out.elements);
    return out;
  }

  bool membership(FamilyId f, Diagram const& a) {
    switch (f) {
      case FamilyId::C:
        return true;
      case FamilyId::SYM:
        return is_brauer(a) && rank(a) == a.degree();
      case FamilyId::B:
        return is_brauer(a);
      case FamilyId::PB:
        return is_partial_brauer(a);
      case FamilyId::J:
        return is_jones(a);
      case FamilyId::PJ:
        return is_partial_brauer(a) && is_planar(a);
      case FamilyId::A:
        return is_brauer(a) && is_annular(a);
      case FamilyId::PA:
        return is_partial_brauer(a) && is_annular(a);
      case FamilyId::EA:
        return is_brauer(a) && is_annular(a) && is_even_like(a);
    }
    return false;
  }

  std::vector<std::size_t> cardinality_table(FamilyId    f,
                                             std::size_t n_max,
                                             std::size_t budget) {
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
      out.push_back(construct(f, n, budget).size());
    }
    return out;
  }

  SemigroupPtr semigroup_of(FamilyInstance const& instance, std::size_t budget) {
    if (instance.strategy == Strategy::Generated) {
      return Semigroup::closure(instance.generators, budget);
    }
    std::vector<Diagram> by_rank = instance.elements;
    std::stable_sort(by_rank.begin(),
                     by_rank.end(),
                     [](Diagram const& a, Diagram const& b) {
                       return rank(a) > rank(b);
                     });
    return Semigroup::from_elements(by_rank, instance.generators);
  }

  bool conjectured_generators_hold(FamilyId f, std::size_t n, std::size_t budget) {
    if (f != FamilyId::PB && f != FamilyId::PA) {
      throw BadIndex("no conjectured generating set for family "
                     + std::string(to_string(f)));
    }
    auto gens = natural_generators(f, n);
    auto got  = Semigroup::closure(gens, budget)->diagrams();
    sort_unique(got);
    return got == construct(f, n, budget).elements;
  }

}  // namespace brauer
