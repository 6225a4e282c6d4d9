// brauer - diagram semigroups and complexity bounds

#include "brauer/kernel.hpp"

#include <algorithm>
#include <functional>

#include "brauer/diagram.hpp"
#include "brauer/families.hpp"
#include "brauer/green.hpp"

namespace brauer {

  namespace {

    constexpr std::size_t DENSE_LIMIT = 4096;

    // Products through a full multiplication table when it is small enough,
    // otherwise by walking words in the right Cayley graph.
    class Multiplier {
     public:
      explicit Multiplier(Semigroup const& s) : _s(s), _n(s.size()) {
        if (_n > DENSE_LIMIT) {
          return;
        }
        _table.resize(_n * _n);
        for (id_type a = 0; a < _n; ++a) {
          id_type* row = _table.data() + static_cast<std::size_t>(a) * _n;
          for (id_type b = 0; b < _n; ++b) {
            id_type p = s.prefix(b);
            row[b]    = s.right(p == UNDEFINED ? a : row[p], s.last_letter(b));
          }
        }
      }

      id_type operator()(id_type a, id_type b) const {
        return _table.empty() ? _s.product(a, b)
                              : _table[static_cast<std::size_t>(a) * _n + b];
      }

     private:
      Semigroup const&     _s;
      std::size_t          _n;
      std::vector<id_type> _table;
    };

    std::vector<std::pair<id_type, id_type>> pairs_with(Multiplier const& mul,
                                                        std::size_t       n,
                                                        WeakInverse       form) {
      std::vector<std::pair<id_type, id_type>> out;
      for (id_type x = 0; x < n; ++x) {
        for (id_type y = 0; y < n; ++y) {
          bool ok = form == WeakInverse::BarXBar ? mul(mul(y, x), y) == y
                                                 : mul(mul(x, y), x) == x;
          if (ok) {
            out.emplace_back(x, y);
          }
        }
      }
      return out;
    }

  }  // namespace

  std::vector<std::pair<id_type, id_type>> weak_inverse_pairs(Semigroup const& s,
                                                              WeakInverse form) {
    return pairs_with(Multiplier(s), s.size(), form);
  }

  bool KernelResult::contains(id_type a) const {
    return std::binary_search(kernel_ids.begin(), kernel_ids.end(), a);
  }

  KernelResult kernel(Semigroup const& s, KernelOptions const& options) {
    std::size_t const N = s.size();
    Multiplier const  mul(s);
    auto              pairs = pairs_with(mul, N, options.form);
    if (options.reverse) {
      std::reverse(pairs.begin(), pairs.end());
    }

    KernelResult         out;
    std::vector<bool>    in(N, false);
    std::vector<id_type> k;
    std::size_t          round = 0;

    auto add = [&](KernelStep step) {
      if (!in[step.result]) {
        in[step.result] = true;
        k.push_back(step.result);
        step.round = round;
        out.provenance.push_back(step);
      }
    };

    std::vector<id_type> seeds = idempotents(s);
    if (options.reverse) {
      std::reverse(seeds.begin(), seeds.end());
    }
    for (auto e : seeds) {
      add({KernelStep::Kind::Idempotent, e});
    }

    std::size_t closed_upto = 0;
    std::size_t conj_upto   = 0;
    while (true) {
      // Every pair (i, j) with j <= i is multiplied once, when i is reached.
      for (; closed_upto < k.size(); ++closed_upto) {
        id_type a = k[closed_upto];
        for (std::size_t j = 0; j <= closed_upto; ++j) {
          id_type b = k[j];
          add({KernelStep::Kind::Product, mul(a, b), a, b});
          add({KernelStep::Kind::Product, mul(b, a), b, a});
        }
      }
      if (conj_upto == k.size()) {
        break;
      }
      ++round;
      std::size_t const end = k.size();
      for (std::size_t i = conj_upto; i < end; ++i) {
        id_type c = k[options.reverse ? end - 1 - (i - conj_upto) : i];
        for (auto [x, xbar] : pairs) {
          add({KernelStep::Kind::Conjugate, mul(mul(x, c), xbar), x, c, xbar});
          add({KernelStep::Kind::Conjugate, mul(mul(xbar, c), x), xbar, c, x});
        }
      }
      conj_upto = end;
    }

    out.iterations = round;
    out.kernel_ids = k;
    std::sort(out.kernel_ids.begin(), out.kernel_ids.end());
    for (auto a : k) {
      if (index_period(s, a).second > 1) {
        out.is_aperiodic = false;
        out.witness      = a;
        break;
      }
    }
    return out;
  }

  bool is_kernel_closed(Semigroup const&            s,
                        std::vector<id_type> const& k,
                        WeakInverse                 form) {
    Multiplier const  mul(s);
    std::vector<bool> in(s.size(), false);
    for (auto a : k) {
      in[a] = true;
    }
    for (auto a : k) {
      for (auto b : k) {
        if (!in[mul(a, b)]) {
          return false;
        }
      }
    }
    for (auto [x, xbar] : pairs_with(mul, s.size(), form)) {
      for (auto c : k) {
        if (!in[mul(mul(x, c), xbar)] || !in[mul(mul(xbar, c), x)]) {
          return false;
        }
      }
    }
    auto const e = idempotents(s);
    return std::all_of(e.begin(), e.end(), [&](id_type x) { return in[x]; });
  }

  std::vector<KernelStep> derivation_of(KernelResult const& result, id_type a) {
    std::vector<std::size_t> where(
        result.provenance.empty()
            ? 0
            : std::max_element(result.provenance.begin(),
                               result.provenance.end(),
                               [](auto const& x, auto const& y) {
                                 return x.result < y.result;
                               })->result
                  + 1,
        static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < result.provenance.size(); ++i) {
      where[result.provenance[i].result] = i;
    }
    if (a >= where.size() || where[a] == static_cast<std::size_t>(-1)) {
      throw BadIndex("element is not in the kernel");
    }
    std::vector<KernelStep> out;
    std::vector<bool>       done(result.provenance.size(), false);
    std::function<void(id_type)> visit = [&](id_type x) {
      std::size_t i = where[x];
      if (done[i]) {
        return;
      }
      done[i]          = true;
      auto const& step = result.provenance[i];
      if (step.kind == KernelStep::Kind::Product) {
        visit(step.a);
        visit(step.b);
      } else if (step.kind == KernelStep::Kind::Conjugate) {
        visit(step.b);
      }
      out.push_back(step);
    };
    visit(a);
    return out;
  }

  std::string describe(Semigroup const& s, KernelStep const& step) {
    auto name = [&](id_type x) { return s.element_name(x); };
    switch (step.kind) {
      case KernelStep::Kind::Idempotent:
        return name(step.result) + " is idempotent";
      case KernelStep::Kind::Product:
        return name(step.result) + " = " + name(step.a) + " * " + name(step.b);
      case KernelStep::Kind::Conjugate:
        return name(step.result) + " = " + name(step.a) + " * " + name(step.b)
               + " * " + name(step.c) + " (weak conjugate, round "
               + std::to_string(step.round) + ")";
    }
    return {};
  }

  bool in_A_star_G(Semigroup const& s) {
    return kernel(s).is_aperiodic;
  }

  bool verify_parity_morphism_A4() {
    std::size_t const n = 4;
    auto              a4 = semigroup_of(construct(FamilyId::A, n));
    auto const&       S  = *a4;
    id_type const     one = *S.identity();
    auto const        U   = units(S);
    std::vector<bool> is_unit(S.size(), false);
    for (auto u : U) {
      is_unit[u] = true;
    }

    // τ1(s) ⊆ units, τ2(s) ⊆ {−1, 1}.
    std::vector<std::vector<id_type>> tau1(S.size());
    std::vector<std::vector<int>>     tau2(S.size());
    for (id_type x = 0; x < S.size(); ++x) {
      tau1[x] = is_unit[x] ? std::vector<id_type>{x} : U;
      auto const& d = S.diagram(x);
      if (rank(d) == 0) {
        tau2[x] = {-1, 1};
      } else {
        tau2[x] = {parity(d) == Parity::Odd ? -1 : 1};
      }
    }

    auto contains = [](auto const& v, auto t) {
      return std::find(v.begin(), v.end(), t) != v.end();
    };
    for (id_type x = 0; x < S.size(); ++x) {
      if (tau1[x].empty() || tau2[x].empty()) {
        return false;
      }
      for (id_type y = 0; y < S.size(); ++y) {
        id_type xy = S.product(x, y);
        for (auto s : tau1[x]) {
          for (auto t : tau1[y]) {
            if (!contains(tau1[xy], S.product(s, t))) {
              return false;
            }
          }
        }
        for (auto s : tau2[x]) {
          for (auto t : tau2[y]) {
            if (!contains(tau2[xy], s * t)) {
              return false;
            }
          }
        }
      }
    }

    std::vector<Diagram> preimage, expected;
    for (id_type x = 0; x < S.size(); ++x) {
      if (contains(tau1[x], one) && contains(tau2[x], 1)) {
        preimage.push_back(S.diagram(x));
      }
    }
    for (auto const& d : construct(FamilyId::EA, n).elements) {
      if (rank(d) < n || d == identity(n)) {
        expected.push_back(d);
      }
    }
    std::sort(preimage.begin(), preimage.end());
    return preimage == expected;
  }

}  // namespace brauer
