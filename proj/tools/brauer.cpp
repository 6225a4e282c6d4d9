// brauer - diagram semigroups and complexity bounds
//
// Command-line front end. Exit codes: 0 success or PASS, 1 FAIL or a
// runtime failure (budget, corrupt cache), 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "brauer/cache.hpp"
#include "brauer/families.hpp"
#include "brauer/green.hpp"
#include "brauer/kernel.hpp"
#include "brauer/ledger.hpp"
#include "brauer/verify.hpp"

using namespace brauer;
using nlohmann::json;

namespace {

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Common {
    std::string family;
    std::size_t n      = 0;
    std::size_t budget = DEFAULT_BUDGET;
    std::string cache_dir;
  };

  FamilyId parse_family(std::string const& name) {
    try {
      return family_from_string(name);
    } catch (BadIndex const&) {
      throw UsageError("unknown family '" + name + "'");
    }
  }

  FamilyInstance load(Common const& c, bool* from_cache = nullptr) {
    auto dir = c.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(c.cache_dir);
    try {
      return load_or_build(parse_family(c.family), c.n, dir, c.budget, from_cache);
    } catch (BadDegree const& e) {
      throw UsageError(e.what());
    }
  }

  int cmd_gen(Common const& c) {
    bool cached = false;
    auto inst   = load(c, &cached);
    auto s      = semigroup_of(inst, c.budget);
    auto g      = green(*s);

    std::map<std::size_t, std::size_t> histogram;
    for (auto const& d : inst.elements) {
      ++histogram[rank(d)];
    }
    std::cout << "family " << to_string(inst.family) << "\n"
              << "degree " << inst.degree << "\n"
              << "strategy " << to_string(inst.strategy) << "\n"
              << "source " << (cached ? "cache" : "built") << "\n"
              << "count " << inst.size() << "\n"
              << "rank histogram\n";
    for (auto [r, k] : histogram) {
      std::cout << "  rank " << r << ": " << k << "\n";
    }
    std::cout << "green R " << g.num_r << " L " << g.num_l << " H " << g.num_h << " J "
              << g.num_j << "\n"
              << "idempotents " << idempotents(*s).size() << "\n";
    if (s->identity()) {
      std::cout << "units order " << units(*s).size() << "\n";
    }
    std::cout << "essential depth " << essential_depth(g) << "\n";
    return 0;
  }

  int cmd_green(Common const& c) {
    auto inst = load(c);
    auto s    = semigroup_of(inst, c.budget);
    auto g    = green(*s);
    std::cout << "J-classes of " << family_name(inst.family, inst.degree) << " (" << s->size()
              << " elements)\n";
    for (std::size_t j = 0; j < g.num_j; ++j) {
      auto const&           members = g.j_members[j];
      std::set<std::size_t> rs, ls;
      for (auto a : members) {
        rs.insert(g.r_class[a]);
        ls.insert(g.l_class[a]);
      }
      std::cout << "  J" << j << " rank " << rank(s->diagram(members.front())) << " size "
                << members.size() << " R " << rs.size() << " L " << ls.size() << " H "
                << g.h_size[g.h_class[members.front()]]
                << (g.j_regular[j] ? " regular" : " non-regular");
      if (g.j_regular[j]) {
        std::cout << " max-subgroup " << g.j_max_subgroup[j];
      }
      if (g.j_essential[j]) {
        std::cout << " essential";
      }
      std::cout << "\n";
    }
    std::cout << "essential depth " << essential_depth(g) << "\n";
    return 0;
  }

  int cmd_kernel(Common const& c, bool explain) {
    auto inst = load(c);
    auto s    = semigroup_of(inst, c.budget);
    auto k    = kernel(*s);
    std::cout << "kernel of " << family_name(inst.family, inst.degree) << ": "
              << k.kernel_ids.size() << " of " << s->size() << " elements, "
              << k.iterations << " conjugation rounds\n"
              << "aperiodic " << (k.is_aperiodic ? "yes" : "no") << "\n";
    if (k.witness) {
      auto [index, period] = index_period(*s, *k.witness);
      std::cout << "witness " << encode(s->diagram(*k.witness)) << " index " << index
                << " period " << period << "\n";
      if (explain) {
        for (auto const& step : derivation_of(k, *k.witness)) {
          std::cout << "  " << describe(*s, step) << "\n";
        }
      }
    }
    return 0;
  }

  int cmd_count(Common const& c) {
    auto f     = parse_family(c.family);
    auto table = cardinality_table(f, c.n, c.budget);
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::cout << family_name(f, i + 1) << " " << table[i] << "\n";
    }
    return 0;
  }

  int cmd_verify(std::string const&         target,
                 std::optional<std::size_t> n,
                 std::size_t                budget,
                 bool                       list) {
    if (list) {
      for (auto const& t : verify_targets()) {
        std::cout << t.id << "  " << t.anchor << "  [--n: " << t.parameter << "]\n";
      }
      return 0;
    }
    if (target.empty()) {
      throw UsageError("verify needs a target id, 'all' or --list");
    }
    std::vector<std::string> ids;
    if (target == "all") {
      for (auto const& t : verify_targets()) {
        ids.push_back(t.id);
      }
    } else {
      ids.push_back(target);
    }
    bool all_pass = true;
    for (auto const& id : ids) {
      Report r;
      try {
        r = run_target(id, n, budget);
      } catch (BadIndex const& e) {
        throw UsageError(e.what());
      }
      std::cout << r.to_json().dump(2) << "\n";
      all_pass = all_pass && r.passed;
    }
    return all_pass ? 0 : 1;
  }

  std::set<RuleKind> parse_disabled(std::vector<std::string> const& names) {
    std::set<RuleKind> out;
    for (auto const& name : names) {
      bool found = false;
      for (auto k : {RuleKind::Base, RuleKind::Ideal, RuleKind::Local, RuleKind::Principal,
                     RuleKind::KernelChain, RuleKind::Embedding, RuleKind::Axiom}) {
        if (name == to_string(k)) {
          out.insert(k);
          found = true;
        }
      }
      if (!found) {
        throw UsageError("unknown rule '" + name + "'");
      }
    }
    return out;
  }

  int cmd_complexity(std::string const&              format,
                     std::string const&              explain,
                     bool                            pa5,
                     std::vector<std::string> const& disabled,
                     std::size_t                     budget) {
    Ledger::Options options;
    options.disabled = parse_disabled(disabled);
    options.budget   = budget;
    auto ledger      = build_standard_ledger(options, pa5);

    if (!explain.empty()) {
      auto id = ledger.find(explain);
      if (!id) {
        throw UsageError("no ledger instance named '" + explain + "'");
      }
      std::cout << ledger.explain(*id);
      return 0;
    }

    struct Row {
      std::string name;
      Interval    iv;
      std::string status;
      std::string fact;
    };
    std::vector<Row> rows;
    for (auto [f, n] : standard_targets(pa5)) {
      auto name = family_name(f, n);
      auto id   = *ledger.find(name);
      auto iv   = ledger.interval(id);
      auto fact = ledger.current(id);
      rows.push_back({name,
                      iv,
                      iv.is_point() ? "exact" : "OPEN",
                      fact ? "#" + std::to_string(*fact) : ""});
    }
    auto bound = [](std::size_t x) {
      return x == UNBOUNDED ? std::string("inf") : std::to_string(x);
    };

    if (format == "json") {
      json out = json::array();
      for (auto const& r : rows) {
        out.push_back({{"instance", r.name},
                       {"lo", r.iv.lo},
                       {"hi", r.iv.hi == UNBOUNDED ? json(nullptr) : json(r.iv.hi)},
                       {"status", r.status},
                       {"fact", r.fact}});
      }
      std::cout << json{{"complexity", out}, {"refusals", ledger.refusals().size()}}.dump(2)
                << "\n";
    } else if (format == "csv") {
      std::cout << "instance,lo,hi,status,fact\n";
      for (auto const& r : rows) {
        std::cout << r.name << "," << r.iv.lo << "," << bound(r.iv.hi) << "," << r.status
                  << "," << r.fact << "\n";
      }
    } else {
      std::cout << "| instance | interval | status | fact |\n"
                << "|---|---|---|---|\n";
      for (auto const& r : rows) {
        std::cout << "| " << r.name << " | " << to_string(r.iv) << " | " << r.status << " | "
                  << r.fact << " |\n";
      }
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagram semigroups: construction, Green structure, kernels and complexity"};
  app.require_subcommand(1);

  Common c;
  auto   add_family = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "C, B, PB, J, PJ, A, PA, EA or SYM")->required();
    sub->add_option("--n", c.n, "degree")->required()->check(CLI::Range(1, 64));
    sub->add_option("--budget", c.budget, "maximum number of elements");
    sub->add_option("--cache-dir", c.cache_dir, "cache directory")
        ->envname("BRAUER_CACHE_DIR");
  };

  auto* gen = app.add_subcommand("gen", "build or load a family and summarise it");
  add_family(gen);
  auto* grn = app.add_subcommand("green", "list the J-classes of a family");
  add_family(grn);
  auto* ker = app.add_subcommand("kernel", "compute the type II subsemigroup of a family");
  add_family(ker);
  bool kernel_explain = false;
  ker->add_flag("--explain", kernel_explain, "derive the non-aperiodicity witness");

  auto* cnt = app.add_subcommand("count", "sizes of a family for degrees 1..n");
  cnt->add_option("--family", c.family)->required();
  cnt->add_option("--n", c.n, "largest degree")->required()->check(CLI::Range(1, 64));
  cnt->add_option("--budget", c.budget);

  auto*                      ver = app.add_subcommand("verify", "run a verification target");
  std::string                target;
  std::optional<std::size_t> verify_n;
  bool                       list = false;
  ver->add_option("target", target, "target id or 'all'");
  ver->add_option("--n", verify_n, "degree parameter of the target");
  ver->add_option("--budget", c.budget);
  ver->add_flag("--list", list, "list the targets");

  auto*                    cpx = app.add_subcommand("complexity", "certified complexity intervals");
  std::string              format = "md";
  std::string              explain;
  bool                     pa5 = false;
  std::vector<std::string> disabled;
  cpx->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));
  cpx->add_option("--explain", explain, "print the derivation tree of an instance");
  cpx->add_flag("--pa5", pa5, "also derive PA5");
  cpx->add_option("--disable", disabled, "rule kinds to disable");
  cpx->add_option("--budget", c.budget);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      return cmd_gen(c);
    }
    if (*grn) {
      return cmd_green(c);
    }
    if (*ker) {
      return cmd_kernel(c, kernel_explain);
    }
    if (*cnt) {
      return cmd_count(c);
    }
    if (*ver) {
      return cmd_verify(target, verify_n, c.budget, list);
    }
    return cmd_complexity(format, explain, pa5, disabled, c.budget);
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (BadDegree const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
