// brauer - diagram semigroups and complexity bounds
//
// A forward-chaining store of complexity intervals. Semigroups are
// registered as instances; rules relate the intervals of several instances
// and are accepted only after their side conditions have been verified on
// the actual semigroups. Every narrowing of an interval is recorded as a
// Fact that names the rule, the premise facts and the checks performed.

#ifndef BRAUER_LEDGER_HPP_
#define BRAUER_LEDGER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "families.hpp"
#include "semigroup.hpp"

namespace brauer {

  using InstanceId = std::size_t;
  using FactId     = std::size_t;

  constexpr std::size_t UNBOUNDED = std::numeric_limits<std::size_t>::max();

  struct Interval {
    std::size_t lo = 0;
    std::size_t hi = UNBOUNDED;

    bool is_point() const noexcept {
      return lo == hi;
    }

    bool operator==(Interval const&) const = default;
  };

  std::string to_string(Interval const& iv);

  struct Check {
    std::string           name;
    bool                  passed = false;
    std::function<bool()> recheck;
  };

  struct Fact {
    FactId              id;
    InstanceId          subject;
    Interval            interval;
    std::string         rule;
    std::vector<FactId> premises;
    std::vector<Check>  checks;
  };

  struct Refusal {
    std::string rule;
    InstanceId  subject;
    std::string condition;
  };

  struct Instance {
    InstanceId                id;
    std::string               name;
    SemigroupPtr              semigroup;
    std::optional<InstanceId> parent;
    std::optional<FamilyId>   family;
    std::size_t               degree = 0;
  };

  //! A map between diagram semigroups of possibly different degrees.
  using DiagramMap = std::function<Diagram(Diagram const&)>;

  enum class RuleKind { Base, Ideal, Local, Principal, KernelChain, Embedding, Axiom };

  char const* to_string(RuleKind kind);

  class Ledger {
   public:
    struct Options {
      std::set<RuleKind> disabled;
      //! Largest instance on which A∗G membership is decided.
      std::size_t a_star_g_limit = 1000;
      //! Names of imported axioms that may be used; empty by default.
      std::set<std::string> allowed_axioms;
      //! Apply rules in a seeded random order instead of the default order.
      std::optional<std::uint64_t> shuffle_seed;
      std::size_t                  budget = DEFAULT_BUDGET;
    };

    Ledger() : Ledger(Options{}) {}
    explicit Ledger(Options options) : _options(std::move(options)) {}

    ////////////////////////////////////////////////////////////////////////
    // Instances
    ////////////////////////////////////////////////////////////////////////

    InstanceId add_family(FamilyId f, std::size_t n);
    //! A subsemigroup of s generated by the given diagrams.
    InstanceId add_generated(InstanceId                  s,
                             std::string const&          name,
                             std::vector<Diagram> const& gens);
    InstanceId add_local_monoid(InstanceId s, id_type e);
    InstanceId add_principal_ideal(InstanceId s, id_type e);
    InstanceId add_rees_quotient(InstanceId s, InstanceId ideal);
    InstanceId add_kernel(InstanceId s);
    InstanceId add_idempotent_generated(InstanceId s);

    std::optional<InstanceId> find(std::string const& name) const;
    Instance const&           instance(InstanceId i) const {
      return _instances.at(i);
    }
    std::size_t num_instances() const noexcept {
      return _instances.size();
    }

    ////////////////////////////////////////////////////////////////////////
    // Rules
    ////////////////////////////////////////////////////////////////////////

    //! [0,0] if aperiodic, otherwise [1, essential depth]; hi ≤ 1 if the
    //! instance is inverse or (when small enough) lies in A∗G.
    std::vector<FactId> assert_base_facts(InstanceId s);

    //! hi(S) ≤ hi(I) + hi(S/I); registers S/I if needed.
    void apply_ideal_rule(InstanceId s, InstanceId ideal);
    //! c(SeS) = c(eSe); registers both if needed.
    void apply_local_rule(InstanceId s, id_type e);
    //! c(S) = c(eSe) + 1 under the side conditions: non-trivial units,
    //! e ∉ units, S = ⟨units, e⟩ and SeS ⊆ ⟨E(S)⟩.
    void apply_principal_rule(InstanceId s, id_type e);
    //! c(K_G(S)) < c(S) for non-aperiodic S with a generating ≤_L chain.
    void apply_kernel_chain_rule(InstanceId s,
                                 std::vector<id_type> const& pool = {});
    //! c(T) ≤ c(S) for T ⊆ S (same diagrams).
    void apply_subsemigroup_rule(InstanceId t, InstanceId s);
    //! c(T) ≤ c(S) for an injective homomorphism T → S given on diagrams;
    //! c(T) = c(S) when it is onto.
    void apply_embedding_rule(InstanceId         t,
                              InstanceId         s,
                              std::string const& map_name,
                              DiagramMap const&  map);
    //! An externally proved interval; refused unless name is allowed.
    void import_axiom(InstanceId s, Interval iv, std::string const& name);

    //! Applies every accepted rule until no interval changes.
    void derive_all();

    ////////////////////////////////////////////////////////////////////////
    // Results
    ////////////////////////////////////////////////////////////////////////

    Interval interval(InstanceId s) const;
    //! The latest fact about s, if any.
    std::optional<FactId> current(InstanceId s) const;

    std::vector<Fact> const& facts() const noexcept {
      return _facts;
    }
    Fact const& fact(FactId f) const {
      return _facts.at(f);
    }
    std::vector<Refusal> const& refusals() const noexcept {
      return _refusals;
    }

    //! Reruns every check in the derivation tree of f and confirms that all
    //! premises exist, precede f and passed.
    bool verify_derivation(FactId f) const;

    //! All facts in the derivation tree of f, premises first.
    std::vector<FactId> derivation_tree(FactId f) const;

    //! Indented text rendering of the derivation tree.
    std::string explain(InstanceId s) const;

   private:
    struct Link {
      RuleKind                kind;
      std::string             rule;
      std::vector<InstanceId> inputs;
      InstanceId              subject;
      std::vector<Check>      checks;
      // Computes the interval implied for subject from the current
      // intervals of inputs (indexed as in inputs).
      std::function<Interval(std::vector<Interval> const&)> conclude;
    };

    InstanceId add_instance(std::string               name,
                            SemigroupPtr              s,
                            std::optional<InstanceId> parent);
    void       require_enabled(RuleKind kind, std::string const& rule, InstanceId s);
    void       require(std::vector<Check> const& checks,
                       std::string const&        rule,
                       InstanceId                s);
    void       add_link(Link link);
    bool       propagate(Link const& link);
    bool       narrow(InstanceId          s,
                      Interval            iv,
                      std::string const&  rule,
                      std::vector<FactId> premises,
                      std::vector<Check>  checks);
    void       ensure_base(InstanceId s);

    Options                           _options;
    std::vector<Instance>             _instances;
    std::map<std::string, InstanceId> _by_name;
    std::vector<Fact>                 _facts;
    std::vector<std::optional<FactId>> _current;
    std::vector<bool>                 _has_base;
    std::vector<Link>                 _links;
    std::vector<Refusal>              _refusals;
  };

  struct LedgerTarget {
    FamilyId    family;
    std::size_t degree;
  };

  //! The families whose complexity the standard ledger determines.
  std::vector<LedgerTarget> standard_targets(bool include_pa5 = false);

  //! Registers the standard targets and the auxiliary instances and rules
  //! that pin their intervals down, then derives to the fixpoint.
  Ledger build_standard_ledger(Ledger::Options const& options     = {},
                               bool                   include_pa5 = false);

  //! Name under which a family instance is registered, e.g. "EA6".
  std::string family_name(FamilyId f, std::size_t n);

}  // namespace brauer

#endif  // BRAUER_LEDGER_HPP_
