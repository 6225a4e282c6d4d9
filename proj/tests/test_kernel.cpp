#include <catch2/catch_amalgamated.hpp>

#include "brauer/families.hpp"
#include "brauer/green.hpp"
#include "brauer/kernel.hpp"

using namespace brauer;

namespace {

  // Smallest set containing the idempotents that is closed under products
  // and under c -> x c y, y c x for every pair with y x y = y. Plain
  // fixpoint iteration over the whole set.
  std::vector<id_type> naive_kernel(Semigroup const& s) {
    std::size_t const N = s.size();
    std::vector<bool> in(N, false);
    for (id_type a = 0; a < N; ++a) {
      in[a] = s.product(a, a) == a;
    }
    std::vector<std::pair<id_type, id_type>> pairs;
    for (id_type x = 0; x < N; ++x) {
      for (id_type y = 0; y < N; ++y) {
        if (s.product(s.product(y, x), y) == y) {
          pairs.emplace_back(x, y);
        }
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      auto mark = [&](id_type z) {
        if (!in[z]) {
          in[z]   = true;
          changed = true;
        }
      };
      for (id_type a = 0; a < N; ++a) {
        if (!in[a]) {
          continue;
        }
        for (id_type b = 0; b < N; ++b) {
          if (in[b]) {
            mark(s.product(a, b));
          }
        }
        for (auto [x, y] : pairs) {
          mark(s.product(s.product(x, a), y));
          mark(s.product(s.product(y, a), x));
        }
      }
    }
    std::vector<id_type> out;
    for (id_type a = 0; a < N; ++a) {
      if (in[a]) {
        out.push_back(a);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("kernel agrees with fixpoint oracle", "[kernel][oracle]") {
  for (auto [f, n] : {std::pair{FamilyId::A, 3}, std::pair{FamilyId::A, 4},
                      std::pair{FamilyId::B, 3}, std::pair{FamilyId::PA, 2},
                      std::pair{FamilyId::PJ, 3}, std::pair{FamilyId::EA, 4}}) {
    auto s = semigroup_of(construct(f, n));
    auto k = kernel(*s);
    CHECK(k.kernel_ids == naive_kernel(*s));
    CHECK(is_kernel_closed(*s, k.kernel_ids));
  }
}

TEST_CASE("kernel of a group is trivial", "[kernel]") {
  auto s = semigroup_of(construct(FamilyId::SYM, 4));
  auto k = kernel(*s);
  REQUIRE(k.kernel_ids.size() == 1);
  CHECK(k.kernel_ids.front() == *s->identity());
}

TEST_CASE("kernel of A4", "[kernel]") {
  auto s = semigroup_of(construct(FamilyId::A, 4));
  auto k = kernel(*s);
  std::vector<Diagram> got, expected;
  for (auto a : k.kernel_ids) {
    got.push_back(s->diagram(a));
  }
  for (auto const& d : construct(FamilyId::EA, 4).elements) {
    if (rank(d) < 4 || d == identity(4)) {
      expected.push_back(d);
    }
  }
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
  CHECK(got.size() == 21);
  CHECK(k.is_aperiodic);
  CHECK_FALSE(k.witness);
  CHECK(in_A_star_G(*s));
}

TEST_CASE("both weak inverse forms and orders agree", "[kernel]") {
  for (auto f : {FamilyId::A, FamilyId::PA, FamilyId::B}) {
    auto s    = semigroup_of(construct(f, 4));
    auto base = kernel(*s).kernel_ids;
    CHECK(kernel(*s, {WeakInverse::XBarX, false}).kernel_ids == base);
    CHECK(kernel(*s, {WeakInverse::BarXBar, true}).kernel_ids == base);
    CHECK(kernel(*s, {WeakInverse::XBarX, true}).kernel_ids == base);
    CHECK(is_kernel_closed(*s, base, WeakInverse::XBarX));
  }
}

TEST_CASE("weak inverse pairs", "[kernel]") {
  auto s = semigroup_of(construct(FamilyId::B, 3));
  for (auto [x, y] : weak_inverse_pairs(*s)) {
    CHECK(s->product(s->product(y, x), y) == y);
  }
  for (auto [x, y] : weak_inverse_pairs(*s, WeakInverse::XBarX)) {
    CHECK(s->product(s->product(x, y), x) == x);
  }
}

TEST_CASE("kernel of PA4 is not aperiodic", "[kernel]") {
  auto s = semigroup_of(construct(FamilyId::PA, 4));
  auto k = kernel(*s);
  CHECK_FALSE(k.is_aperiodic);
  REQUIRE(k.witness);
  CHECK(k.contains(*k.witness));
  CHECK(index_period(*s, *k.witness).second == 2);
  CHECK_FALSE(in_A_star_G(*s));
}

TEST_CASE("derivations replay", "[kernel]") {
  auto s = semigroup_of(construct(FamilyId::PA, 4));
  auto k = kernel(*s);
  REQUIRE(k.witness);
  auto steps = derivation_of(k, *k.witness);
  REQUIRE_FALSE(steps.empty());
  CHECK(steps.back().result == *k.witness);
  std::set<id_type> known;
  for (auto const& step : steps) {
    switch (step.kind) {
      case KernelStep::Kind::Idempotent:
        CHECK(is_idempotent(*s, step.result));
        break;
      case KernelStep::Kind::Product:
        CHECK(known.count(step.a));
        CHECK(known.count(step.b));
        CHECK(s->product(step.a, step.b) == step.result);
        break;
      case KernelStep::Kind::Conjugate:
        CHECK(known.count(step.b));
        CHECK(s->product(s->product(step.a, step.b), step.c) == step.result);
        CHECK(step.round >= 1);
        break;
    }
    known.insert(step.result);
    CHECK_FALSE(describe(*s, step).empty());
  }
  auto const all     = s->diagrams();
  auto        outside = std::find_if(all.begin(), all.end(), [&](auto const& d) {
    return !k.contains(*s->find(d));
  });
  REQUIRE(outside != all.end());
  CHECK_THROWS_AS(derivation_of(k, *s->find(*outside)), BadIndex);
}

TEST_CASE("parity morphism on A4", "[kernel]") {
  CHECK(verify_parity_morphism_A4());
}
