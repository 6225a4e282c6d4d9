// brauer - diagram semigroups and complexity bounds
//
// The type-II subsemigroup K_G(S): the smallest subsemigroup containing
// every idempotent and closed under weak conjugation k ↦ x k x̄, x̄ k x for
// weak inverse pairs (x, x̄). Membership of S in A∗G is decided by the
// aperiodicity of K_G(S).

#ifndef BRAUER_KERNEL_HPP_
#define BRAUER_KERNEL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semigroup.hpp"

namespace brauer {

  //! Which equation selects the pairs (x, x̄) used for weak conjugation.
  enum class WeakInverse {
    BarXBar,  //!< x̄ x x̄ = x̄
    XBarX     //!< x x̄ x = x
  };

  std::vector<std::pair<id_type, id_type>>
  weak_inverse_pairs(Semigroup const& s, WeakInverse form = WeakInverse::BarXBar);

  struct KernelStep {
    enum class Kind { Idempotent, Product, Conjugate };
    Kind        kind;
    id_type     result;
    // Product: a * b. Conjugate: a * b * c with b already in the kernel.
    id_type     a     = UNDEFINED;
    id_type     b     = UNDEFINED;
    id_type     c     = UNDEFINED;
    std::size_t round = 0;
  };

  struct KernelResult {
    //! Ascending.
    std::vector<id_type> kernel_ids;
    //! Number of rounds until nothing new appeared.
    std::size_t iterations = 0;
    bool        is_aperiodic = true;
    //! An element of the kernel whose period is greater than 1.
    std::optional<id_type> witness;
    //! How each kernel element was first obtained, in order of discovery.
    std::vector<KernelStep> provenance;

    bool contains(id_type a) const;
  };

  struct KernelOptions {
    WeakInverse form = WeakInverse::BarXBar;
    //! Sweep pairs and kernel elements in reverse order.
    bool reverse = false;
  };

  KernelResult kernel(Semigroup const& s, KernelOptions const& options = {});

  //! True iff one further product and conjugation sweep over k adds nothing.
  bool is_kernel_closed(Semigroup const&            s,
                        std::vector<id_type> const& k,
                        WeakInverse form = WeakInverse::BarXBar);

  //! The steps that produce a, each after the steps its inputs depend on.
  std::vector<KernelStep> derivation_of(KernelResult const& result, id_type a);

  std::string describe(Semigroup const& s, KernelStep const& step);

  bool in_A_star_G(Semigroup const& s);

  //! Builds the relations τ1 : A4 → A4^× and τ2 : A4 → {−1, 1}, checks that
  //! both are relational morphisms and that the preimage of the identity
  //! under τ1 × τ2 is Sing EA4 ∪ {1}.
  bool verify_parity_morphism_A4();

}  // namespace brauer

#endif  // BRAUER_KERNEL_HPP_
