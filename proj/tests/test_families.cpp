#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "brauer/families.hpp"
#include "oracle.hpp"

using namespace brauer;

namespace {

  std::vector<Diagram> filter(std::vector<Diagram> const& v, bool (*keep)(Diagram const&)) {
    std::vector<Diagram> out;
    for (auto const& d : v) {
      if (keep(d)) {
        out.push_back(d);
      }
    }
    return out;
  }

  std::vector<Diagram> singular(FamilyInstance const& f) {
    std::vector<Diagram> out;
    for (auto const& d : f.elements) {
      if (rank(d) < f.degree) {
        out.push_back(d);
      }
    }
    return out;
  }

  std::vector<Diagram> closed(std::vector<Diagram> const& gens) {
    auto v = Semigroup::closure(gens)->diagrams();
    std::sort(v.begin(), v.end());
    return v;
  }

}  // namespace

TEST_CASE("names round trip", "[families]") {
  for (auto f : all_families()) {
    CHECK(family_from_string(to_string(f)) == f);
  }
  for (auto s : {Strategy::Generated, Strategy::Enumerated, Strategy::RotatedPlanar}) {
    CHECK(strategy_from_string(to_string(s)) == s);
  }
  CHECK_THROWS_AS(family_from_string("Q"), BadIndex);
}

TEST_CASE("Brauer monoid equals the perfect matchings", "[families][oracle]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto b = construct(FamilyId::B, n);
    CHECK(b.strategy == Strategy::Generated);
    CHECK(b.size() == oracle::double_factorial_odd(n));
    if (n <= 5) {
      CHECK(b.elements == oracle::matchings(n, true));
    }
  }
}

TEST_CASE("Jones monoid equals the non-crossing matchings", "[families][oracle]") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(construct(FamilyId::J, n).size() == oracle::catalan(n));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Diagram> nc;
    for (auto const& d : oracle::matchings(n, true)) {
      if (oracle::non_crossing(d)) {
        nc.push_back(d);
      }
    }
    CHECK(construct(FamilyId::J, n).elements == nc);
  }
  auto b4      = construct(FamilyId::B, 4).elements;
  std::size_t planar = 0;
  for (auto const& d : b4) {
    planar += membership(FamilyId::J, d);
  }
  CHECK(planar == 14);
}

TEST_CASE("partial families", "[families][oracle]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto pb = construct(FamilyId::PB, n);
    CHECK(pb.size() == oracle::involutions(2 * n));
    CHECK(pb.elements == oracle::matchings(n, false));
    std::vector<Diagram> nc;
    for (auto const& d : pb.elements) {
      if (oracle::non_crossing(d)) {
        nc.push_back(d);
      }
    }
    CHECK(construct(FamilyId::PJ, n).elements == nc);
  }
  CHECK(cardinality_table(FamilyId::PB, 4) == std::vector<std::size_t>{2, 10, 76, 764});
  CHECK(cardinality_table(FamilyId::PJ, 6)
        == std::vector<std::size_t>{2, 9, 51, 323, 2188, 15511});
  CHECK(cardinality_table(FamilyId::PA, 5) == std::vector<std::size_t>{2, 10, 73, 589, 5046});
}

TEST_CASE("partition monoid", "[families][oracle]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(construct(FamilyId::C, n).size() == oracle::bell(2 * n));
  }
  CHECK_THROWS_AS(construct(FamilyId::C, MAX_PARTITION_DEGREE + 1), BadDegree);
}

TEST_CASE("symmetric group", "[families]") {
  std::size_t fact = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    fact *= n;
    auto s = construct(FamilyId::SYM, n);
    CHECK(s.size() == fact);
    CHECK(closed(symmetric_generators(n)) == s.elements);
  }
}

TEST_CASE("annular monoid", "[families]") {
  CHECK(cardinality_table(FamilyId::A, 6) == std::vector<std::size_t>{1, 3, 12, 40, 180, 625});
  for (std::size_t n = 1; n <= 5; ++n) {
    auto a = construct(FamilyId::A, n);
    CHECK(a.elements == filter(construct(FamilyId::B, n).elements, is_annular));
  }
  auto a4 = construct(FamilyId::A, 4);
  std::vector<Diagram> units, rotations;
  for (auto const& d : a4.elements) {
    CHECK(is_annular(d));
    if (rank(d) == 4) {
      units.push_back(d);
    }
  }
  for (long k = 0; k < 4; ++k) {
    rotations.push_back(zeta_power(4, k));
  }
  std::sort(rotations.begin(), rotations.end());
  CHECK(units == rotations);
  CHECK(membership(FamilyId::A, gamma_cyc(5, 5)));
}

TEST_CASE("annular monoid is the rotated Jones monoid", "[families]") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<Diagram> rotated;
    for (auto const& b : construct(FamilyId::J, n).elements) {
      for (long x = 0; x < static_cast<long>(n); ++x) {
        for (long y = 0; y < static_cast<long>(n); ++y) {
          rotated.insert(zeta_power(n, x) * b * zeta_power(n, y));
        }
      }
    }
    auto a = construct(FamilyId::A, n).elements;
    CHECK(std::vector<Diagram>(rotated.begin(), rotated.end()) == a);
  }
}

TEST_CASE("even annular monoid", "[families]") {
  CHECK_FALSE(membership(FamilyId::EA, zeta(6)));
  CHECK(membership(FamilyId::EA, power(zeta(6), 2)));
  for (std::size_t n : {2, 4, 6}) {
    auto ea = construct(FamilyId::EA, n);
    std::vector<Diagram> even;
    for (auto const& d : construct(FamilyId::A, n).elements) {
      if (parity(d) == Parity::Even || parity(d) == Parity::RankZero) {
        even.push_back(d);
      }
    }
    CHECK(ea.elements == even);
    CHECK_NOTHROW(semigroup_of(ea));
  }
  CHECK(construct(FamilyId::EA, 4).size() == 22);
  CHECK(construct(FamilyId::EA, 6).size() == 325);
  CHECK_THROWS_AS(construct(FamilyId::EA, 5), BadDegree);
}

TEST_CASE("membership matches construction", "[families]") {
  for (auto f : {FamilyId::B, FamilyId::J, FamilyId::A, FamilyId::PB, FamilyId::PJ,
                 FamilyId::PA, FamilyId::EA, FamilyId::SYM}) {
    std::size_t const n   = 4;
    auto              all = construct(FamilyId::PB, n).elements;
    auto              in  = construct(f, n).elements;
    for (auto const& d : all) {
      CHECK(membership(f, d) == std::binary_search(in.begin(), in.end(), d));
    }
  }
  CHECK(membership(FamilyId::C, embed_transformation(3, {1, 1, 1})));
}

TEST_CASE("singular parts are generated by the gammas", "[families]") {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<Diagram> g;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        g.push_back(gamma_pair(n, i, j));
      }
    }
    CHECK(singular(construct(FamilyId::B, n)) == closed(g));
  }
  auto cyclic = [](std::size_t n, std::size_t last) {
    std::vector<Diagram> g;
    for (std::size_t i = 1; i <= last; ++i) {
      g.push_back(gamma_cyc(n, i));
    }
    return g;
  };
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK(singular(construct(FamilyId::J, n)) == closed(cyclic(n, n - 1)));
  }
  for (std::size_t n : {2, 4, 6}) {
    CHECK(singular(construct(FamilyId::EA, n)) == closed(cyclic(n, n)));
  }
  for (std::size_t n : {3, 5, 7}) {
    CHECK(singular(construct(FamilyId::A, n)) == closed(cyclic(n, n)));
  }
  for (std::size_t n : {4, 6}) {
    CHECK(singular(construct(FamilyId::A, n)) != closed(cyclic(n, n)));
  }
}

TEST_CASE("semigroup_of keeps the element set", "[families]") {
  for (auto f : all_families()) {
    auto inst = construct(f, 3 + (f == FamilyId::EA));
    auto s    = semigroup_of(inst);
    auto v    = s->diagrams();
    std::sort(v.begin(), v.end());
    CHECK(v == inst.elements);
  }
}

TEST_CASE("budget is enforced", "[families]") {
  CHECK_THROWS_AS(construct(FamilyId::B, 6, 1000), BudgetExceeded);
  CHECK_THROWS_AS(construct(FamilyId::PB, 5, 1000), BudgetExceeded);
}

TEST_CASE("conjectured generating sets", "[families]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(conjectured_generators_hold(FamilyId::PB, n));
  }
  // <zeta, gamma_1, sigma_1> misses part of PA_n once n >= 3.
  CHECK(conjectured_generators_hold(FamilyId::PA, 2));
  CHECK_FALSE(conjectured_generators_hold(FamilyId::PA, 3));
  CHECK_FALSE(conjectured_generators_hold(FamilyId::PA, 4));
  CHECK_THROWS_AS(conjectured_generators_hold(FamilyId::B, 3), BadIndex);
}
