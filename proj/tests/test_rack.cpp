#include <algorithm>

#include "doctest.h"
#include "fulcrum/rack.hpp"

using namespace fulcrum;

TEST_SUITE("rackgroup") {
  TEST_CASE("dihedral rack") {
    RackData const r = dihedral_rack();
    CHECK(r.size() == 3);
    CHECK(r.op(1, 2) == 0);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(r.op(i, i) == i);
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(r.op(r.op(i, j), i) == j);
      }
    }
  }

  TEST_CASE("rack validation") {
    CHECK_THROWS_AS(RackData({{0, 0}, {1, 1}}), rack_error);
    // Left translations are bijections but i ▷ (j ▷ k) fails.
    CHECK_THROWS_AS(RackData({{1, 0, 2}, {0, 1, 2}, {0, 1, 2}}), rack_error);
    CHECK_NOTHROW(RackData({{0, 1}, {0, 1}}));
  }

  TEST_CASE("automorphisms of the dihedral rack") {
    RackData const r    = dihedral_rack();
    auto const     auts = rack_automorphisms(r);
    CHECK(auts.size() == 6);
    CHECK(auts.front().perm() == std::vector<std::size_t>{0, 1, 2});
    auto has = [&](std::vector<std::size_t> p) {
      return std::any_of(auts.begin(), auts.end(),
                         [&](auto const& a) { return a.perm() == p; });
    };
    CHECK(has({0, 2, 1}));
    for (auto const& a : auts) {
      CHECK(has(a.inverse().perm()));
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          CHECK(a(r.op(i, j)) == r.op(a(i), a(j)));
        }
      }
    }
    CHECK_THROWS(RackAutomorphism(RackData({{0, 1}, {0, 1}}), {0, 0}));
  }

  TEST_CASE("the S3 quotient") {
    GroupTable const G = s3_quotient(dihedral_rack());
    CHECK(G.order() == 6);
    auto const e = G.identity();
    CHECK(e == 0);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(G.mul(G.g(i), G.g(i)) == e);
    }
    CHECK(G.mul(G.g(0), G.g(1)) == G.mul(G.g(2), G.g(0)));
    CHECK(G.name(e) == "e");
    CHECK(G.name(G.g(1)) == "g1");
    for (std::size_t a = 0; a < G.order(); ++a) {
      CHECK(G.evaluate(G.factorization(a)) == a);
      CHECK(G.mul(a, G.inverse(a)) == e);
    }
  }

  TEST_CASE("conjugation action") {
    GroupTable const G = s3_quotient(dihedral_rack());
    RackData const&  r = G.rack();
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(conjugation_action(G.identity(), i, G) == i);
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(conjugation_action(G.g(j), i, G) == r.op(j, i));
      }
    }
    for (std::size_t g = 0; g < G.order(); ++g) {
      for (std::size_t h = 0; h < G.order(); ++h) {
        for (std::size_t i = 0; i < 3; ++i) {
          CHECK(conjugation_action(G.mul(g, h), i, G)
                == conjugation_action(g, conjugation_action(h, i, G), G));
        }
      }
    }
  }

  TEST_CASE("other quotients of the enveloping group") {
    RackData const r = dihedral_rack();
    CHECK(enveloping_quotient(r, 4).order() == 12);
    CHECK_THROWS_AS(enveloping_quotient(r, 6, 12), coset_overflow);
  }

  TEST_CASE("group tables are validated") {
    RackData const r = dihedral_rack();
    GroupTable const G = s3_quotient(r);
    auto bad = G.table();
    std::swap(bad[1][2], bad[1][3]);
    std::vector<std::vector<std::size_t>> fact;
    for (std::size_t a = 0; a < G.order(); ++a) {
      fact.push_back(G.factorization(a));
    }
    CHECK_THROWS(GroupTable(r, bad, G.distinguished(), fact));
    CHECK_NOTHROW(GroupTable(r, G.table(), G.distinguished(), fact));
  }
}
