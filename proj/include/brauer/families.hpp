// brauer - diagram semigroups and complexity bounds
//
// The named diagram families at a fixed degree, built either as the closure
// of a generating set, by enumerating and filtering, or (for the partial
// annular monoid) by rotating planar diagrams.

#ifndef BRAUER_FAMILIES_HPP_
#define BRAUER_FAMILIES_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "diagram.hpp"
#include "semigroup.hpp"

namespace brauer {

  enum class FamilyId { C, B, PB, J, PJ, A, PA, EA, SYM };

  enum class Strategy { Generated, Enumerated, RotatedPlanar };

  char const* to_string(FamilyId f);
  char const* to_string(Strategy s);
  //! Inverse of to_string; throws BadIndex for unknown names.
  FamilyId family_from_string(std::string_view name);
  Strategy strategy_from_string(std::string_view name);

  std::vector<FamilyId> all_families();

  //! Largest degree for which the full partition monoid is constructed.
  constexpr std::size_t MAX_PARTITION_DEGREE = 5;

  struct FamilyInstance {
    FamilyId             family;
    std::size_t          degree;
    Strategy             strategy;
    //! The closure generators for Generated instances; a preferred
    //! generating pool otherwise.
    std::vector<Diagram> generators;
    //! All elements, sorted.
    std::vector<Diagram> elements;

    std::size_t size() const noexcept {
      return elements.size();
    }
  };

  FamilyInstance construct(FamilyId    f,
                           std::size_t n,
                           std::size_t budget = DEFAULT_BUDGET);

  //! Pointwise membership test that does not build the family.
  bool membership(FamilyId f, Diagram const& a);

  //! |f_n| for n = 1..n_max.
  std::vector<std::size_t> cardinality_table(FamilyId    f,
                                             std::size_t n_max,
                                             std::size_t budget = DEFAULT_BUDGET);

  //! The instance as a semigroup. Generated instances are closed from their
  //! generators; other instances get a greedy generating set drawn from the
  //! preferred pool and then from the elements by descending rank.
  SemigroupPtr semigroup_of(FamilyInstance const& instance,
                            std::size_t           budget = DEFAULT_BUDGET);

  //! Whether PB_n = ⟨S_n, γ12, σ1⟩ (f = PB) or PA_n = ⟨ζ, γ1, σ1⟩ (f = PA).
  //! Reported only; nothing relies on it.
  bool conjectured_generators_hold(FamilyId    f,
                                   std::size_t n,
                                   std::size_t budget = DEFAULT_BUDGET);

  //! Generators of S_n: the transposition (1 2) and ζ.
  std::vector<Diagram> symmetric_generators(std::size_t n);

  //! All (2n-1)!! Brauer diagrams, unsorted.
  std::vector<Diagram> all_brauer(std::size_t n);
  //! All partial Brauer diagrams (partial matchings of 2n points).
  std::vector<Diagram> all_partial_brauer(std::size_t n,
                                          std::size_t budget = DEFAULT_BUDGET);

}  // namespace brauer

#endif  // BRAUER_FAMILIES_HPP_
