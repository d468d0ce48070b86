#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fulcrum/classify.hpp"
#include "support.hpp"

using namespace fulcrum;

namespace {
  PairRecord const& find(std::vector<PairRecord> const& ps, std::string const& l,
                         std::string const& m) {
    for (auto const& p : ps) {
      if (p.lambda_bits() == l && p.mu_bits() == m) {
        return p;
      }
    }
    FAIL("pair not enumerated: " << l << "/" << m);
    throw std::logic_error("unreachable");
  }

  IsoWitness witness(std::vector<int> const& s) {
    Field const         f = Field::f2();
    std::vector<Scalar> shifts;
    for (int v : s) {
      shifts.push_back(f.from_int(v));
    }
    return {rack_automorphisms(dihedral_rack()).front(), shifts, f.one()};
  }
}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("pair enumeration") {
    auto const pairs = enumerate_pairs(LambdaMode::gx);
    CHECK(pairs.size() == 32);
    std::set<std::string> lambdas;
    std::set<std::string> zero_mus;
    for (auto const& p : pairs) {
      lambdas.insert(p.lambda_bits());
      if (p.lambda.is_zero()) {
        zero_mus.insert(p.mu_bits());
      }
    }
    CHECK(lambdas.size() == 8);
    CHECK(zero_mus
          == std::set<std::string>{"000000000", "111111111", "100010001",
                                   "011101110"});
    CHECK(std::is_sorted(pairs.begin(), pairs.end(), [](auto const& a, auto const& b) {
      return std::make_pair(a.lambda_bits(), a.mu_bits())
             < std::make_pair(b.lambda_bits(), b.mu_bits());
    }));
  }

  TEST_CASE("isomorphism witnesses") {
    auto const pairs = enumerate_pairs(LambdaMode::gx);
    auto const& zero = find(pairs, "000000000", "000000000");
    auto const& j    = find(pairs, "000000000", "111111111");
    auto const& e00  = find(pairs, "000101110", "100000000");

    auto const self = iso_related(zero, zero);
    REQUIRE(self);
    CHECK(self->phi.perm() == std::vector<std::size_t>{0, 1, 2});
    for (auto const& s : self->shifts) {
      CHECK(s.is_zero());
    }
    CHECK(is_witness(witness({1, 1, 1}), zero, j));
    CHECK(iso_related(zero, j));
    CHECK(is_witness(witness({1, 0, 0}), zero, e00));
    CHECK_FALSE(is_witness(witness({0, 0, 0}), zero, j));
    for (auto const& p : pairs) {
      CHECK(iso_related(p, p));
    }
  }

  TEST_CASE("ten classes") {
    auto const c = partition_classes(enumerate_pairs(LambdaMode::gx));
    REQUIRE(c.classes.size() == 10);
    std::vector<std::size_t> sizes;
    for (auto const& cl : c.classes) {
      sizes.push_back(cl.size());
    }
    CHECK(sizes == std::vector<std::size_t>{8, 8, 3, 3, 3, 3, 1, 1, 1, 1});
    auto class_of = [&](std::string const& l, std::string const& m) {
      return find(c.pairs, l, m).class_id;
    };
    CHECK(class_of("000000000", "000000000") == class_of("000000000", "111111111"));
    CHECK(class_of("000000000", "000000000") == class_of("000101110", "100000000"));
    for (auto const& m : {"000000000", "111111111", "100010001", "011101110"}) {
      auto const id = class_of("111111111", m);
      REQUIRE(id);
      CHECK(c.classes[*id].size() == 1);
    }
    CHECK(c.missing_inverse_witnesses == 0);
    CHECK(c.related_ordered_pairs >= 100);
    RackData const rack = dihedral_rack();
    for (auto const& cl : c.classes) {
      bool any = false;
      for (auto a : cl) {
        any = any || satisfies_quotient_condition(c.pairs[a].lambda, rack);
      }
      CHECK(any);
    }
  }

  TEST_CASE("the partition does not depend on input order") {
    auto       pairs = enumerate_pairs(LambdaMode::gx);
    auto const a     = partition_classes(pairs);
    std::mt19937_64 rng(fulcrum::test::seed());
    for (int round = 0; round < 3; ++round) {
      std::shuffle(pairs.begin(), pairs.end(), rng);
      auto const b = partition_classes(pairs);
      CHECK(b.classes == a.classes);
      CHECK(emit_table(b, TableFormat::json) == emit_table(a, TableFormat::json));
    }
  }

  TEST_CASE("tables") {
    auto c = partition_classes(enumerate_pairs(LambdaMode::gx));
    c.pairs[0].dimension = 72;
    c.pairs[0].galois_r  = 5184;
    std::string const js = emit_table(c, TableFormat::json);
    auto const        back = read_table(js);
    CHECK(emit_table(back, TableFormat::json) == js);
    CHECK(back.pairs[0].dimension == 72u);
    CHECK_FALSE(back.pairs[0].galois_l);

    std::string const csv = emit_table(c, TableFormat::csv);
    CHECK(csv.rfind("lambda,mu,class,dim,galois_r,galois_l\n", 0) == 0);

    std::istringstream md(emit_table(c, TableFormat::markdown));
    std::string        line;
    std::size_t        rows = 0;
    while (std::getline(md, line)) {
      rows += line.rfind("| 0", 0) == 0 || line.rfind("| 1", 0) == 0;
    }
    CHECK(rows == 32);

    CHECK(parse_table_format("md") == TableFormat::markdown);
    CHECK_THROWS(parse_table_format("xml"));
    CHECK_THROWS(read_table("{"));
    CHECK_THROWS(read_table(R"({"schema": 2})"));
  }
}
