// brauer - diagram semigroups and complexity bounds
//
// Finite semigroups with dense integer ids, generators, right and left
// Cayley graphs, and a factorisation of every element as
// prefix * generator. Products of arbitrary elements are evaluated by
// walking the factorisation of the right-hand factor through the right
// Cayley graph, so no hashing is needed once a semigroup is built.
//
// Three kinds of semigroup share this representation:
//   - closures of diagrams (elements are Diagram values),
//   - subsemigroups of another Semigroup (elements are parent ids),
//   - abstract semigroups given by a multiplication table.

#ifndef BRAUER_SEMIGROUP_HPP_
#define BRAUER_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "diagram.hpp"

namespace brauer {

  using id_type = std::uint32_t;

  constexpr id_type     UNDEFINED      = std::numeric_limits<id_type>::max();
  constexpr std::size_t DEFAULT_BUDGET = 5'000'000;

  class Semigroup;
  using SemigroupPtr = std::shared_ptr<Semigroup const>;

  class Semigroup {
    template <typename Store>
    friend class ClosureBuilder;

   public:
    enum class Kind { Diagrams, Subsemigroup, Table };

    //! The subsemigroup generated by gens. Ids are assigned to the
    //! generators in the given order, then in breadth-first discovery order.
    static SemigroupPtr closure(std::vector<Diagram> const& gens,
                                std::size_t budget = DEFAULT_BUDGET);

    //! The subsemigroup of parent generated by the given parent ids.
    static SemigroupPtr generated(SemigroupPtr                parent,
                                  std::vector<id_type> const& seeds,
                                  std::size_t budget = DEFAULT_BUDGET);

    //! The subsemigroup of parent whose elements are exactly ids. A
    //! generating set is chosen greedily in the order of ids; throws
    //! NotASubsemigroup if ids is not closed under the product.
    static SemigroupPtr induced(SemigroupPtr                parent,
                                std::vector<id_type> const& ids);

    //! The semigroup whose elements are exactly the given diagrams.
    //! Generators are chosen greedily, first from pool and then from
    //! elements in order; throws NotASubsemigroup if elements is not closed.
    static SemigroupPtr from_elements(std::vector<Diagram> const& elements,
                                      std::vector<Diagram> const& pool);

    //! An abstract semigroup from a row-major multiplication table on
    //! 0..size-1; names label the elements for reports.
    static SemigroupPtr from_table(std::vector<id_type> const&     table,
                                   std::vector<std::string> const& names);

    Kind kind() const noexcept {
      return _kind;
    }

    std::size_t size() const noexcept {
      return _prefix.size();
    }

    std::size_t num_generators() const noexcept {
      return _gens.size();
    }

    std::vector<id_type> const& generators() const noexcept {
      return _gens;
    }

    //! a * (generator g)
    id_type right(id_type a, std::size_t g) const {
      return _right[static_cast<std::size_t>(a) * _gens.size() + g];
    }

    //! (generator g) * a
    id_type left(id_type a, std::size_t g) const {
      return _left[static_cast<std::size_t>(a) * _gens.size() + g];
    }

    id_type product(id_type a, id_type b) const;

    //! Generator indices whose product (left to right) equals a.
    std::vector<std::size_t> factorisation(id_type a) const;

    //! a = prefix(a) * generator(last_letter(a)), or a is that generator
    //! when prefix(a) is UNDEFINED. Prefixes have smaller ids.
    id_type prefix(id_type a) const {
      return _prefix[a];
    }

    std::size_t last_letter(id_type a) const {
      return _last[a];
    }

    //! Id of the generator with index g.
    id_type generator(std::size_t g) const {
      return _gens[g];
    }

    std::optional<id_type> identity() const noexcept {
      return _identity;
    }

    //! True when elements can be viewed as diagrams.
    bool has_diagrams() const noexcept;

    //! Degree of the underlying diagrams, or 0 for abstract semigroups.
    std::size_t degree() const noexcept;

    Diagram const& diagram(id_type a) const;

    std::optional<id_type> find(Diagram const& d) const;

    bool contains(Diagram const& d) const {
      return find(d).has_value();
    }

    //! All elements as diagrams, in id order.
    std::vector<Diagram> diagrams() const;

    //! The encoded diagram, or the table name of an abstract element.
    std::string element_name(id_type a) const;

    //! Parent semigroup for Kind::Subsemigroup, nullptr otherwise.
    SemigroupPtr const& parent() const noexcept {
      return _parent;
    }

    //! For subsemigroups, the id in the parent of each element.
    id_type parent_id(id_type a) const {
      return _parent_ids[a];
    }

    //! For subsemigroups, the id of a parent element, or UNDEFINED.
    id_type from_parent(id_type p) const;

   private:
    Semigroup() = default;
    void finalise();

    Kind                 _kind = Kind::Diagrams;
    std::vector<id_type> _gens;
    std::vector<id_type> _right;
    std::vector<id_type> _left;
    std::vector<id_type> _prefix;
    std::vector<id_type> _last;
    std::vector<std::size_t>   _word_offset;
    std::vector<std::uint16_t> _word_letters;
    std::optional<id_type>     _identity;

    // Kind::Diagrams
    std::vector<Diagram>                              _elements;
    std::unordered_map<Diagram, id_type, DiagramHash> _index;

    // Kind::Subsemigroup
    SemigroupPtr         _parent;
    std::vector<id_type> _parent_ids;
    std::vector<id_type> _from_parent;

    // Kind::Table
    std::vector<std::string> _names;
  };

  //! Element ids of the subsemigroup of s generated by seeds, sorted.
  std::vector<id_type> closure_ids(Semigroup const&            s,
                                   std::vector<id_type> const& seeds);

  //! Ids of all elements of s as they lie in t, i.e. the image of the
  //! inclusion s -> t; UNDEFINED for elements of s that are not in t.
  //! Both must be diagram-backed.
  std::vector<id_type> inclusion_map(Semigroup const& s, Semigroup const& t);

  //! α ↦ α ∪ {{n+1,n+2},{(n+1)',(n+2)'}}; target_n must be a.degree() + 2.
  Diagram pad_embedding(Diagram const& a, std::size_t target_n);

}  // namespace brauer

#endif  // BRAUER_SEMIGROUP_HPP_
