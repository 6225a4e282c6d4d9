// brauer - diagram semigroups and complexity bounds

#include "brauer/ledger.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "brauer/green.hpp"
#include "brauer/kernel.hpp"

namespace brauer {

  namespace {

    std::size_t add_sat(std::size_t a, std::size_t b) {
      return (a == UNBOUNDED || b == UNBOUNDED) ? UNBOUNDED : a + b;
    }

    std::size_t sub_sat(std::size_t a, std::size_t b) {
      if (a == UNBOUNDED) {
        return UNBOUNDED;
      }
      return a >= b ? a - b : 0;
    }

    Check make_check(std::string name, std::function<bool()> fn) {
      bool passed = fn();
      return Check{std::move(name), passed, std::move(fn)};
    }

    int priority(RuleKind kind) {
      switch (kind) {
        case RuleKind::Local:
        case RuleKind::Principal:
          return 0;
        default:
          return 1;
      }
    }

    id_type id_of(Semigroup const& s, Diagram const& d) {
      auto id = s.find(d);
      if (!id) {
        throw NotASubsemigroup("the diagram " + encode(d)
                               + " is not an element of the semigroup");
      }
      return *id;
    }

  }  // namespace

  std::string to_string(Interval const& iv) {
    auto bound = [](std::size_t x) {
      return x == UNBOUNDED ? std::string("inf") : std::to_string(x);
    };
    return "[" + bound(iv.lo) + "," + bound(iv.hi) + "]";
  }

  char const* to_string(RuleKind kind) {
    switch (kind) {
      case RuleKind::Base:
        return "base";
      case RuleKind::Ideal:
        return "ideal";
      case RuleKind::Local:
        return "local";
      case RuleKind::Principal:
        return "principal";
      case RuleKind::KernelChain:
        return "kernel-chain";
      case RuleKind::Embedding:
        return "embedding";
      case RuleKind::Axiom:
        return "axiom";
    }
    return "?";
  }

  std::string family_name(FamilyId f, std::size_t n) {
    return std::string(to_string(f)) + std::to_string(n);
  }

  ////////////////////////////////////////////////////////////////////////
  // Instances
  ////////////////////////////////////////////////////////////////////////

  InstanceId Ledger::add_instance(std::string               name,
                                  SemigroupPtr              s,
                                  std::optional<InstanceId> parent) {
    if (auto it = _by_name.find(name); it != _by_name.end()) {
      return it->second;
    }
    InstanceId id = _instances.size();
    Instance   inst{id, name, std::move(s), parent, std::nullopt, 0};
    inst.degree = inst.semigroup->degree();
    _instances.push_back(std::move(inst));
    _by_name.emplace(std::move(name), id);
    _current.emplace_back();
    _has_base.push_back(false);
    return id;
  }

  InstanceId Ledger::add_family(FamilyId f, std::size_t n) {
    auto name = family_name(f, n);
    if (auto it = _by_name.find(name); it != _by_name.end()) {
      return it->second;
    }
    auto id = add_instance(
        name, semigroup_of(construct(f, n, _options.budget), _options.budget), {});
    _instances[id].family = f;
    return id;
  }

  InstanceId Ledger::add_generated(InstanceId                  s,
                                   std::string const&          name,
                                   std::vector<Diagram> const& gens) {
    auto const&          parent = _instances.at(s).semigroup;
    std::vector<id_type> ids;
    for (auto const& d : gens) {
      ids.push_back(id_of(*parent, d));
    }
    return add_instance(name, Semigroup::generated(parent, ids, _options.budget), s);
  }

  InstanceId Ledger::add_local_monoid(InstanceId s, id_type e) {
    auto const& S    = _instances.at(s).semigroup;
    auto        name = "LocalMonoid(" + _instances[s].name + ", "
                + S->element_name(e) + ")";
    if (auto it = _by_name.find(name); it != _by_name.end()) {
      return it->second;
    }
    return add_instance(name, local_monoid(S, e), s);
  }

  InstanceId Ledger::add_principal_ideal(InstanceId s, id_type e) {
    auto const& S    = _instances.at(s).semigroup;
    auto        name = "PrincipalIdeal(" + _instances[s].name + ", "
                + S->element_name(e) + ")";
    if (auto it = _by_name.find(name); it != _by_name.end()) {
      return it->second;
    }
    return add_instance(name, Semigroup::induced(S, principal_ideal(*S, e)), s);
  }

  InstanceId Ledger::add_rees_quotient(InstanceId s, InstanceId ideal) {
    auto const& I = _instances.at(ideal);
    if (I.parent != s) {
      throw NotAnIdeal(I.name + " is not registered inside "
                       + _instances.at(s).name);
    }
    auto name = "ReesQuotient(" + _instances[s].name + ", " + I.name + ")";
    if (auto it = _by_name.find(name); it != _by_name.end()) {
      return it->second;
    }
    std::vector<id_type> ids;
    for (id_type a = 0; a < I.semigroup->size(); ++a) {
      ids.push_back(I.semigroup->parent_id(a));
    }
    return add_instance(name, rees_quotient(*_instances[s].semigroup, ids), s);
  }

  InstanceId Ledger::add_kernel(InstanceId s) {
    auto name = "Kernel(" + _instances.at(s).name + ")";
    if (auto it = _by_name.find(name); it != _by_name.end()) {
      return it->second;
    }
    auto const& S = _instances[s].semigroup;
    return add_instance(name, Semigroup::induced(S, kernel(*S).kernel_ids), s);
  }

  InstanceId Ledger::add_idempotent_generated(InstanceId s) {
    auto name = "IdempotentGenerated(" + _instances.at(s).name + ")";
    if (auto it = _by_name.find(name); it != _by_name.end()) {
      return it->second;
    }
    return add_instance(name, idempotent_generated(_instances[s].semigroup), s);
  }

  std::optional<InstanceId> Ledger::find(std::string const& name) const {
    if (auto it = _by_name.find(name); it != _by_name.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Facts
  ////////////////////////////////////////////////////////////////////////

  Interval Ledger::interval(InstanceId s) const {
    auto f = _current.at(s);
    return f ? _facts[*f].interval : Interval{};
  }

  std::optional<FactId> Ledger::current(InstanceId s) const {
    return _current.at(s);
  }

  bool Ledger::narrow(InstanceId          s,
                      Interval            iv,
                      std::string const&  rule,
                      std::vector<FactId> premises,
                      std::vector<Check>  checks) {
    Interval old = interval(s);
    Interval now{std::max(old.lo, iv.lo), std::min(old.hi, iv.hi)};
    if (now == old) {
      return false;
    }
    if (now.lo > now.hi) {
      throw Error("contradictory complexity bounds for " + _instances[s].name
                  + ": " + to_string(old) + " and " + to_string(iv) + " from "
                  + rule);
    }
    if (_current[s]) {
      premises.insert(premises.begin(), *_current[s]);
    }
    FactId id = _facts.size();
    _facts.push_back(
        Fact{id, s, now, rule, std::move(premises), std::move(checks)});
    _current[s] = id;
    return true;
  }

  std::vector<FactId> Ledger::assert_base_facts(InstanceId s) {
    std::vector<FactId> out;
    auto                S     = _instances.at(s).semigroup;
    auto const          g     = green(*S);
    bool const          aper  = is_aperiodic(*S, g);
    std::size_t const   depth = essential_depth(g);
    _has_base[s]              = true;

    auto record = [&](Interval iv, std::string rule, std::vector<Check> checks) {
      if (narrow(s, iv, rule, {}, std::move(checks))) {
        out.push_back(_facts.size() - 1);
      }
    };

    if (aper) {
      record({0, 0},
             "base: aperiodic",
             {make_check("aperiodic", [S] { return is_aperiodic(*S); })});
      return out;
    }
    record({1, depth},
           "base: essential depth",
           {make_check("not aperiodic", [S] { return !is_aperiodic(*S); }),
            make_check("essential depth = " + std::to_string(depth),
                       [S, depth] { return essential_depth(*S) == depth; })});
    if (is_inverse(*S)) {
      record({0, 1},
             "base: inverse",
             {make_check("inverse", [S] { return is_inverse(*S); })});
    }
    if (depth >= 2 && S->size() <= _options.a_star_g_limit && in_A_star_G(*S)) {
      record({0, 1},
             "base: A*G",
             {make_check("type-II kernel aperiodic",
                         [S] { return in_A_star_G(*S); })});
    }
    return out;
  }

  void Ledger::ensure_base(InstanceId s) {
    if (!_has_base.at(s)) {
      assert_base_facts(s);
    }
  }

  void Ledger::import_axiom(InstanceId s, Interval iv, std::string const& name) {
    require_enabled(RuleKind::Axiom, "axiom: " + name, s);
    if (_options.allowed_axioms.count(name) == 0) {
      _refusals.push_back({"axiom: " + name, s, "not in the allow-list"});
      throw SideConditionFailed("axiom '" + name + "' is not in the allow-list");
    }
    narrow(s, iv, "axiom: " + name, {}, {Check{"allow-listed", true, [] {
                                                 return true;
                                               }}});
    derive_all();
  }

  ////////////////////////////////////////////////////////////////////////
  // Rules
  ////////////////////////////////////////////////////////////////////////

  void Ledger::require_enabled(RuleKind kind, std::string const& rule, InstanceId s) {
    if (_options.disabled.count(kind) != 0) {
      _refusals.push_back({rule, s, "rule disabled"});
      throw SideConditionFailed("rule disabled: " + rule);
    }
  }

  void Ledger::require(std::vector<Check> const& checks,
                       std::string const&        rule,
                       InstanceId                s) {
    for (auto const& c : checks) {
      if (!c.passed) {
        _refusals.push_back({rule, s, c.name});
        throw SideConditionFailed(c.name);
      }
    }
  }

  void Ledger::add_link(Link link) {
    _links.push_back(std::move(link));
    derive_all();
  }

  bool Ledger::propagate(Link const& link) {
    std::vector<Interval> in;
    std::vector<FactId>   premises;
    for (auto i : link.inputs) {
      in.push_back(interval(i));
      if (_current[i]) {
        premises.push_back(*_current[i]);
      }
    }
    return narrow(link.subject, link.conclude(in), link.rule, premises, link.checks);
  }

  void Ledger::derive_all() {
    std::vector<std::size_t> order(_links.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return priority(_links[a].kind) < priority(_links[b].kind);
    });
    std::mt19937_64 rng(_options.shuffle_seed.value_or(0));
    bool            changed = true;
    while (changed) {
      if (_options.shuffle_seed) {
        std::shuffle(order.begin(), order.end(), rng);
      }
      changed = false;
      for (auto i : order) {
        changed = propagate(_links[i]) || changed;
      }
    }
  }

  void Ledger::apply_ideal_rule(InstanceId s, InstanceId ideal) {
    std::string rule = "ideal: c(S) <= c(I) + c(S/I)";
    require_enabled(RuleKind::Ideal, rule, s);
    auto const S = _instances.at(s).semigroup;
    auto const I = _instances.at(ideal).semigroup;
    std::vector<id_type> ids;
    for (id_type a = 0; a < I->size(); ++a) {
      ids.push_back(I->parent_id(a));
    }
    std::vector<Check> checks{
        make_check("I is a subsemigroup of S",
                   [I, S] { return I->parent() == S; }),
        make_check("I is a two-sided ideal of S", [S, ids] {
          try {
            check_ideal(*S, ids);
            return true;
          } catch (NotAnIdeal const&) {
            return false;
          }
        })};
    if (!checks[1].passed) {
      _refusals.push_back({rule, s, checks[1].name});
      throw NotAnIdeal(_instances[ideal].name + " is not an ideal of "
                       + _instances[s].name);
    }
    require(checks, rule, s);
    InstanceId q = add_rees_quotient(s, ideal);
    auto const Q = _instances[q].semigroup;
    checks.push_back(make_check("S/I has |S| - |I| + 1 elements", [S, I, Q] {
      return Q->size() == S->size() - I->size() + 1;
    }));
    require(checks, rule, s);
    ensure_base(ideal);
    ensure_base(q);
    add_link({RuleKind::Ideal, rule, {ideal, q}, s, checks, [](auto const& in) {
                return Interval{0, add_sat(in[0].hi, in[1].hi)};
              }});
  }

  void Ledger::apply_local_rule(InstanceId s, id_type e) {
    std::string rule = "local: c(SeS) = c(eSe)";
    require_enabled(RuleKind::Local, rule, s);
    auto const S = _instances.at(s).semigroup;
    if (!is_idempotent(*S, e)) {
      _refusals.push_back({rule, s, "e is idempotent"});
      throw NotIdempotent(S->element_name(e) + " is not idempotent");
    }
    InstanceId ideal = add_principal_ideal(s, e);
    InstanceId local = add_local_monoid(s, e);
    auto const I     = _instances[ideal].semigroup;
    auto const L     = _instances[local].semigroup;
    std::vector<Check> checks{
        make_check("e is idempotent", [S, e] { return is_idempotent(*S, e); }),
        make_check("SeS is the ideal generated by e",
                   [S, I, e] {
                     return I->parent() == S && I->size() == principal_ideal(*S, e).size()
                            && I->from_parent(e) != UNDEFINED;
                   }),
        make_check("eSe is a monoid with identity e", [S, L, e] {
          return L->parent() == S && L->identity()
                 && L->parent_id(*L->identity()) == e;
        })};
    require(checks, rule, s);
    ensure_base(ideal);
    ensure_base(local);
    add_link({RuleKind::Local, rule, {local}, ideal, checks, [](auto const& in) {
                return in[0];
              }});
    add_link({RuleKind::Local, rule, {ideal}, local, checks, [](auto const& in) {
                return in[0];
              }});
  }

  void Ledger::apply_principal_rule(InstanceId s, id_type e) {
    std::string rule = "principal: c(S) = c(eSe) + 1";
    require_enabled(RuleKind::Principal, rule, s);
    auto const S = _instances.at(s).semigroup;
    std::vector<Check> checks{
        make_check("units non-trivial",
                   [S] { return S->identity() && units(*S).size() > 1; }),
        make_check("e is an idempotent outside the units",
                   [S, e] {
                     auto u = units(*S);
                     return is_idempotent(*S, e)
                            && std::find(u.begin(), u.end(), e) == u.end();
                   }),
        make_check("S is generated by its units and e",
                   [S, e] {
                     auto gens = units(*S);
                     gens.push_back(e);
                     return closure_ids(*S, gens).size() == S->size();
                   }),
        make_check("SeS is contained in the idempotent-generated subsemigroup",
                   [S, e] {
                     auto ideal = principal_ideal(*S, e);
                     auto ie    = closure_ids(*S, idempotents(*S));
                     return std::includes(
                         ie.begin(), ie.end(), ideal.begin(), ideal.end());
                   })};
    require(checks, rule, s);
    InstanceId local = add_local_monoid(s, e);
    ensure_base(local);
    add_link({RuleKind::Principal, rule, {local}, s, checks, [](auto const& in) {
                return Interval{add_sat(in[0].lo, 1), add_sat(in[0].hi, 1)};
              }});
    add_link({RuleKind::Principal, rule, {s}, local, checks, [](auto const& in) {
                return Interval{sub_sat(in[0].lo, 1), sub_sat(in[0].hi, 1)};
              }});
  }

  void Ledger::apply_kernel_chain_rule(InstanceId s, std::vector<id_type> const& pool) {
    std::string rule = "kernel-chain: c(K_G(S)) < c(S)";
    require_enabled(RuleKind::KernelChain, rule, s);
    auto const S     = _instances.at(s).semigroup;
    auto const chain = t1_chain(*S, pool);
    std::string chain_text = "generating L-chain";
    if (chain) {
      for (std::size_t i = 0; i < chain->size(); ++i) {
        chain_text += (i == 0 ? ": " : " <=_L ") + S->element_name((*chain)[i]);
      }
    }
    std::vector<Check> checks{
        make_check(chain_text,
                   [S, pool] { return t1_chain(*S, pool).has_value(); }),
        make_check("S is not aperiodic", [S] { return !is_aperiodic(*S); })};
    require(checks, rule, s);
    InstanceId k = add_kernel(s);
    ensure_base(k);
    add_link({RuleKind::KernelChain, rule, {k}, s, checks, [](auto const& in) {
                return Interval{add_sat(in[0].lo, 1), UNBOUNDED};
              }});
    add_link({RuleKind::KernelChain, rule, {s}, k, checks, [](auto const& in) {
                return Interval{0, sub_sat(in[0].hi, 1)};
              }});
  }

  void Ledger::apply_subsemigroup_rule(InstanceId t, InstanceId s) {
    apply_embedding_rule(t, s, "inclusion", [](Diagram const& d) { return d; });
  }

  void Ledger::apply_embedding_rule(InstanceId         t,
                                    InstanceId         s,
                                    std::string const& map_name,
                                    DiagramMap const&  map) {
    std::string rule = map_name == "inclusion"
                           ? std::string("subsemigroup: c(T) <= c(S)")
                           : "embedding via " + map_name + ": c(T) <= c(S)";
    require_enabled(RuleKind::Embedding, rule, s);
    auto const T = _instances.at(t).semigroup;
    auto const S = _instances.at(s).semigroup;

    auto image = [T, S, map]() {
      std::vector<id_type> out(T->size(), UNDEFINED);
      for (id_type a = 0; a < T->size(); ++a) {
        if (auto b = S->find(map(T->diagram(a)))) {
          out[a] = *b;
        }
      }
      return out;
    };
    auto img = image();
    if (std::find(img.begin(), img.end(), UNDEFINED) != img.end()) {
      _refusals.push_back({rule, s, "the map lands in S"});
      throw SideConditionFailed("the map lands in S (the image of " + _instances[t].name
                                + " is not contained in " + _instances[s].name + ")");
    }
    std::vector<Check> checks{
        make_check("the map lands in S",
                   [image] {
                     auto v = image();
                     return std::find(v.begin(), v.end(), UNDEFINED) == v.end();
                   }),
        make_check("the map is injective",
                   [image] {
                     auto v = image();
                     std::sort(v.begin(), v.end());
                     return std::adjacent_find(v.begin(), v.end()) == v.end();
                   }),
        make_check("the map is multiplicative", [image, T, S] {
          auto v = image();
          for (id_type a = 0; a < T->size(); ++a) {
            for (id_type b = 0; b < T->size(); ++b) {
              if (v[T->product(a, b)] != S->product(v[a], v[b])) {
                return false;
              }
            }
          }
          return true;
        })};
    require(checks, rule, s);
    add_link({RuleKind::Embedding, rule, {t}, s, checks, [](auto const& in) {
                return Interval{in[0].lo, UNBOUNDED};
              }});
    add_link({RuleKind::Embedding, rule, {s}, t, checks, [](auto const& in) {
                return Interval{0, in[0].hi};
              }});
    if (T->size() == S->size()) {
      auto iso_checks = checks;
      iso_checks.push_back(make_check("the map is onto", [T, S] {
        return T->size() == S->size();
      }));
      std::string iso_rule = "isomorphism via " + map_name + ": c(T) = c(S)";
      add_link({RuleKind::Embedding, iso_rule, {t}, s, iso_checks, [](auto const& in) {
                  return in[0];
                }});
      add_link({RuleKind::Embedding, iso_rule, {s}, t, iso_checks, [](auto const& in) {
                  return in[0];
                }});
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Derivations
  ////////////////////////////////////////////////////////////////////////

  std::vector<FactId> Ledger::derivation_tree(FactId f) const {
    std::vector<FactId> out;
    std::vector<bool>   seen(_facts.size(), false);
    std::vector<std::pair<FactId, bool>> stack{{f, false}};
    while (!stack.empty()) {
      auto [x, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        out.push_back(x);
        continue;
      }
      if (seen[x]) {
        continue;
      }
      seen[x] = true;
      stack.emplace_back(x, true);
      for (auto p : _facts[x].premises) {
        if (!seen[p]) {
          stack.emplace_back(p, false);
        }
      }
    }
    return out;
  }

  bool Ledger::verify_derivation(FactId f) const {
    if (f >= _facts.size()) {
      return false;
    }
    for (auto x : derivation_tree(f)) {
      auto const& fact = _facts[x];
      if (fact.interval.lo > fact.interval.hi) {
        return false;
      }
      for (auto p : fact.premises) {
        if (p >= x) {
          return false;
        }
      }
      for (auto const& c : fact.checks) {
        if (!c.passed || !c.recheck || !c.recheck()) {
          return false;
        }
      }
    }
    return true;
  }

  std::string Ledger::explain(InstanceId s) const {
    std::ostringstream os;
    auto               f = current(s);
    if (!f) {
      os << _instances.at(s).name << ": no facts\n";
      return os.str();
    }
    std::vector<bool>                     shown(_facts.size(), false);
    std::function<void(FactId, std::size_t)> show = [&](FactId x, std::size_t depth) {
      auto const& fact = _facts[x];
      os << std::string(2 * depth, ' ') << "#" << x << " "
         << _instances[fact.subject].name << " " << to_string(fact.interval)
         << "  by " << fact.rule;
      if (shown[x]) {
        os << "  (see above)\n";
        return;
      }
      shown[x] = true;
      os << "\n";
      for (auto const& c : fact.checks) {
        os << std::string(2 * depth + 4, ' ') << (c.passed ? "[ok] " : "[FAILED] ")
           << c.name << "\n";
      }
      for (auto p : fact.premises) {
        show(p, depth + 1);
      }
    };
    show(*f, 0);
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // The standard ledger
  ////////////////////////////////////////////////////////////////////////

  std::vector<LedgerTarget> standard_targets(bool include_pa5) {
    std::vector<LedgerTarget> out;
    for (std::size_t n = 1; n <= 6; ++n) {
      out.push_back({FamilyId::B, n});
    }
    for (std::size_t n = 1; n <= 6; ++n) {
      out.push_back({FamilyId::J, n});
    }
    for (std::size_t n = 1; n <= 6; ++n) {
      out.push_back({FamilyId::A, n});
    }
    for (std::size_t n : {2, 4, 6}) {
      out.push_back({FamilyId::EA, n});
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      out.push_back({FamilyId::PB, n});
    }
    for (std::size_t n = 1; n <= (include_pa5 ? 5 : 4); ++n) {
      out.push_back({FamilyId::PA, n});
    }
    return out;
  }

  Ledger build_standard_ledger(Ledger::Options const& options, bool include_pa5) {
    Ledger ledger(options);
    auto   fam = [&](FamilyId f, std::size_t n) {
      auto id = ledger.add_family(f, n);
      ledger.assert_base_facts(id);
      return id;
    };
    // Rules that the ledger refuses, or that are disabled, leave the
    // intervals as they are; the refusal is recorded by the ledger.
    auto attempt = [](auto&& fn) {
      try {
        fn();
      } catch (SideConditionFailed const&) {
      }
    };
    auto element = [&](InstanceId s, Diagram const& d) {
      return id_of(*ledger.instance(s).semigroup, d);
    };
    auto pad = [](std::size_t target) {
      return [target](Diagram const& d) { return pad_embedding(d, target); };
    };
    // c(S) = c(S_{n-2}) + 1 with e = γ_{n-1,n} and S_{n-2} ≅ eSe by padding.
    auto principal_step = [&](InstanceId s, InstanceId smaller, std::size_t n) {
      id_type e     = element(s, gamma_cyc(n, n - 1));
      auto    local = ledger.add_local_monoid(s, e);
      ledger.assert_base_facts(local);
      attempt([&] { ledger.apply_embedding_rule(smaller, local, "padding", pad(n)); });
      attempt([&] { ledger.apply_principal_rule(s, e); });
    };
    // c(S) <= c(SeS) + c(S/SeS) with SeS ≅ ... ≅ S_{n-2} via eSe.
    auto ideal_step = [&](InstanceId s, InstanceId smaller, std::size_t n) {
      id_type e     = element(s, gamma_cyc(n, n - 1));
      auto    ideal = ledger.add_principal_ideal(s, e);
      auto    local = ledger.add_local_monoid(s, e);
      ledger.assert_base_facts(ideal);
      ledger.assert_base_facts(local);
      attempt([&] { ledger.apply_local_rule(s, e); });
      attempt([&] { ledger.apply_embedding_rule(smaller, local, "padding", pad(n)); });
      attempt([&] { ledger.apply_ideal_rule(s, ideal); });
    };

    std::map<std::pair<FamilyId, std::size_t>, InstanceId> id;
    for (auto [f, n] : standard_targets(include_pa5)) {
      id[{f, n}] = fam(f, n);
    }

    for (std::size_t n = 3; n <= 6; ++n) {
      principal_step(id[{FamilyId::B, n}], id[{FamilyId::B, n - 2}], n);
    }
    for (std::size_t n = 3; n <= 5; n += 2) {
      principal_step(id[{FamilyId::A, n}], id[{FamilyId::A, n - 2}], n);
    }
    // The principal rule is refused for even annular degrees because the
    // singular part is not idempotent generated.
    for (std::size_t n : {4, 6}) {
      auto s = id[{FamilyId::A, n}];
      attempt([&] { ledger.apply_principal_rule(s, element(s, gamma_cyc(n, n - 1))); });
    }

    // EA'6 = ⟨units, γ5, γ6γ5, ε⟩ is T1, so c(K_G(EA'6)) < c(EA'6), and
    // K_G(EA'6) ⊇ ⟨E(EA'6)⟩ contains a padded copy of EA4.
    {
      std::size_t const n    = 6;
      auto              ea   = id[{FamilyId::EA, n}];
      auto const&       EA   = *ledger.instance(ea).semigroup;
      std::vector<Diagram> gens;
      for (auto u : units(EA)) {
        gens.push_back(EA.diagram(u));
      }
      gens.push_back(gamma_cyc(n, n - 1));
      gens.push_back(gamma_cyc(n, n) * gamma_cyc(n, n - 1));
      gens.push_back(epsilon(n));
      auto prime = ledger.add_generated(ea, "EA'6", gens);
      ledger.assert_base_facts(prime);
      auto kern = ledger.add_kernel(prime);
      auto idem = ledger.add_idempotent_generated(prime);
      ledger.assert_base_facts(kern);
      ledger.assert_base_facts(idem);
      std::vector<id_type> pool;
      for (auto const& d : gens) {
        pool.push_back(element(prime, d));
      }
      attempt([&] { ledger.apply_kernel_chain_rule(prime, pool); });
      attempt([&] { ledger.apply_subsemigroup_rule(idem, kern); });
      attempt([&] {
        ledger.apply_embedding_rule(id[{FamilyId::EA, 4}], idem, "padding", pad(n));
      });
      attempt([&] { ledger.apply_subsemigroup_rule(prime, ea); });
    }

    for (std::size_t n : {2, 4, 6}) {
      attempt([&] {
        ledger.apply_subsemigroup_rule(id[{FamilyId::EA, n}], id[{FamilyId::A, n}]);
      });
    }
    {
      std::size_t const n = 6;
      ideal_step(id[{FamilyId::A, n}], id[{FamilyId::A, n - 2}], n);
    }

    for (auto [whole, part] : {std::pair{FamilyId::PB, FamilyId::B},
                               std::pair{FamilyId::PA, FamilyId::A}}) {
      std::size_t const top = whole == FamilyId::PA && include_pa5 ? 5 : 4;
      for (std::size_t n = 1; n <= top; ++n) {
        attempt([&] { ledger.apply_subsemigroup_rule(id[{part, n}], id[{whole, n}]); });
        if (n >= 3) {
          ideal_step(id[{whole, n}], id[{whole, n - 2}], n);
        }
      }
    }

    ledger.derive_all();
    return ledger;
  }

}  // namespace brauer
