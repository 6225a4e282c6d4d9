// brauer - diagram semigroups and complexity bounds
//
// Green's relations and the structural queries built on them: units,
// idempotents, aperiodicity, essential depth, local monoids, principal
// ideals, Rees quotients, the inverse-semigroup test and T1 chains.

#ifndef BRAUER_GREEN_HPP_
#define BRAUER_GREEN_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semigroup.hpp"

namespace brauer {

  //! R, L, J and H classes of a finite semigroup as per-element class
  //! indices. J-classes are numbered so that every class in j_below[c] has
  //! a smaller index than c.
  struct GreenData {
    std::vector<std::size_t> r_class;
    std::vector<std::size_t> l_class;
    std::vector<std::size_t> j_class;
    std::vector<std::size_t> h_class;

    std::size_t num_r = 0;
    std::size_t num_l = 0;
    std::size_t num_j = 0;
    std::size_t num_h = 0;

    //! Elements of each J-class, ascending.
    std::vector<std::vector<id_type>> j_members;
    //! Size of each H-class.
    std::vector<std::size_t> h_size;
    //! J-order edges: every class listed lies strictly below c.
    std::vector<std::vector<std::size_t>> j_below;

    std::vector<bool>        j_regular;
    std::vector<std::size_t> j_max_subgroup;  // 0 for non-regular classes
    std::vector<bool>        j_essential;
  };

  GreenData green(Semigroup const& s);

  bool is_idempotent(Semigroup const& s, id_type a);

  //! Smallest index i and period p with a^{i+p} = a^i.
  std::pair<std::size_t, std::size_t> index_period(Semigroup const& s,
                                                   id_type          a);

  bool is_aperiodic(Semigroup const& s);
  bool is_aperiodic(Semigroup const& s, GreenData const& g);

  //! Longest chain of essential J-classes.
  std::size_t essential_depth(Semigroup const& s);
  std::size_t essential_depth(GreenData const& g);

  std::vector<id_type> idempotents(Semigroup const& s);
  //! The H-class of the identity; throws NotAMonoid.
  std::vector<id_type> units(Semigroup const& s);
  std::vector<id_type> singular_part(Semigroup const& s);
  SemigroupPtr         idempotent_generated(SemigroupPtr const& s);

  //! eSe with e as its identity; throws NotIdempotent.
  SemigroupPtr local_monoid(SemigroupPtr const& s, id_type e);
  //! S¹eS¹, ascending.
  std::vector<id_type> principal_ideal(Semigroup const& s, id_type e);
  //! Checks that ideal is a two-sided ideal; throws NotAnIdeal.
  void check_ideal(Semigroup const& s, std::vector<id_type> const& ideal);
  //! S/I as a table semigroup. Element 0 is the zero (the image of I);
  //! the remaining elements are S \ I in id order.
  SemigroupPtr rees_quotient(Semigroup const&            s,
                             std::vector<id_type> const& ideal);

  bool is_inverse(Semigroup const& s);

  //! a ≤_L b, i.e. S¹a ⊆ S¹b.
  bool l_leq(Semigroup const& s, id_type a, id_type b);

  //! Searches pool (default: the generators) for a generating set of s that
  //! is totally preordered by ≤_L, dropping redundant members greedily.
  //! Returns the chain in ascending ≤_L order, or nothing if none was found.
  std::optional<std::vector<id_type>>
  t1_chain(Semigroup const& s, std::vector<id_type> const& pool = {});

}  // namespace brauer

#endif  // BRAUER_GREEN_HPP_
