#include <thread>

#include "doctest.h"
#include "fulcrum/fk3.hpp"
#include "fulcrum/gf2.hpp"
#include "support.hpp"

using namespace fulcrum;
using fulcrum::test::f2_ring;
using fulcrum::test::poly;

namespace {
  ReductionSystem fk3_quadratic() {
    auto rels = fk3_relations();
    return ReductionSystem::from_relations(rels.front().ring(), rels);
  }

  PointedYDData s3_data() {
    return PointedYDData(s3_quotient(dihedral_rack()));
  }

  ReductionSystem lifting_before_completion(PointedYDData const& yd) {
    auto const          lam  = LambdaMatrix::zero(Field::f2());
    auto                base = build_presentation(yd, lam, Flavor::t_lambda);
    ReductionSystem     sys  = base.system();
    ScalarMatrix const  mu   = zero_matrix(Field::f2());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        REQUIRE(sys.add_relation(lifting_relation(base, mu, i, j)));
      }
    }
    return sys;
  }
}  // namespace

TEST_SUITE("rewrite") {
  TEST_CASE("normal forms in the quadratic FK3 system") {
    auto const sys = fk3_quadratic();
    auto const r   = sys.ring();
    CHECK(sys.normal_form(Word{2, 0}) == poly("x1 x2 + x0 x1", r));
    CHECK(sys.normal_form(Word{0, 0}).is_zero());
    NcPoly const irr = poly("x0 x1 + x2", r);
    CHECK(sys.normal_form(irr) == irr);
  }

  TEST_CASE("rules must decrease") {
    auto const      r = f2_ring();
    ReductionSystem sys(r);
    CHECK_THROWS_AS(sys.add_rule({Word{0}, poly("x1", r)}), order_violation);
    sys.add_rule({Word{1}, poly("x0", r)});
    CHECK_THROWS(sys.add_rule({Word{1}, poly("x0", r)}));
  }

  TEST_CASE("overlaps and their absence") {
    auto const      r = f2_ring();
    ReductionSystem sys(r);
    sys.add_rule({Word{2, 0}, poly("x1 x2", r)});
    sys.add_rule({Word{0, 1}, poly("x0 x0", r)});
    auto const amb = find_ambiguities(sys);
    bool       found = false;
    for (auto const& a : amb) {
      found = found || (a.word() == Word{2, 0, 1} && a.b == Word{0});
    }
    CHECK(found);

    ReductionSystem single(r);
    single.add_rule({Word{2}, poly("x0", r)});
    single.add_rule({Word{1}, poly("x0", r)});
    CHECK(find_ambiguities(single).empty());
  }

  TEST_CASE("the lifting system has the g x_i x_j ambiguities") {
    auto const yd  = s3_data();
    auto const sys = lifting_before_completion(yd);
    auto const& abc = sys.ring()->alphabet;
    std::size_t family = 0;
    for (auto const& a : find_ambiguities(sys)) {
      Word const w = a.word();
      if (w.size() == 3 && !abc.is_module(w[0]) && abc.is_module(w[1])
          && abc.is_module(w[2])) {
        ++family;
      }
    }
    CHECK(family > 0);
  }

  TEST_CASE("group table rules alone are confluent") {
    auto const yd   = s3_data();
    auto const base = build_presentation(yd, LambdaMatrix::zero(Field::f2()),
                                         Flavor::bosonization);
    ReductionSystem groups(base.ring());
    for (auto const& rule : base.system().rules()) {
      if (!base.ring()->alphabet.is_module(rule.lead[1])) {
        groups.add_rule(rule);
      }
    }
    CHECK(groups.rules().size() == 25);
    auto const rep = complete(groups);
    CHECK(rep.status == CompletionStatus::confluent);
    CHECK(rep.new_rules.empty());
  }

  TEST_CASE("completion of the trivial cleft object adds one cubic rule") {
    auto const yd   = s3_data();
    auto const zero = zero_matrix(Field::f2());
    auto const A    = build_cleft(yd, LambdaMatrix::zero(Field::f2()), zero);
    REQUIRE(A.completion.status == CompletionStatus::confluent);
    REQUIRE(A.completion.new_rules.size() == 1);
    auto const& rule = A.completion.new_rules.front();
    auto const  r    = A.base.ring();
    CHECK(rule.lead == Word{1, 0, 1});
    CHECK(rule.tail == poly("y0 y1 y0", r));
    CHECK(is_locally_confluent(A.system()));
  }

  TEST_CASE("collapse is detected") {
    auto const r   = f2_ring();
    auto       sys = ReductionSystem::from_relations(
        r, {poly("x0 x1 + 1", r), poly("x0", r)});
    auto const rep = complete(sys);
    CHECK(rep.status == CompletionStatus::collapsed_to_zero);
    CHECK(rep.system.collapsed());
    CHECK(to_string(rep.status) == "COLLAPSED_TO_ZERO");
  }

  TEST_CASE("degree cap is reported") {
    // The braid relation has no finite deglex basis.
    auto const r   = make_ring(Alphabet::module_only({"a", "b"}), Field::f2(),
                               MonomialOrder::deglex);
    auto       sys = ReductionSystem::from_relations(r, {poly("b a b + a b a", r)}, 6);
    auto const rep = complete(sys);
    CHECK(rep.status == CompletionStatus::cap_exceeded);
    CHECK(to_string(rep.status) == "CAP_EXCEEDED");
  }

  TEST_CASE("irreducible counts") {
    auto const nich = nichols_algebra();
    CHECK(nich.counts.total == 12);
    CHECK(nich.counts.finite);

    auto const L = build_lifting(s3_data(), LambdaMatrix::zero(Field::f2()),
                                 zero_matrix(Field::f2()));
    CHECK(L.dimension == 72u);

    for (std::size_t k = 1; k <= 4; ++k) {
      ReductionSystem free(f2_ring(k));
      auto const      c = count_irreducible(free, 2);
      CHECK(c.per_length == std::vector<std::size_t>{1, k, k * k});
      CHECK_FALSE(c.finite);
    }
  }

  TEST_CASE("fulcrum normal forms have the PBW shape") {
    auto const L = build_lifting(s3_data(), LambdaMatrix::zero(Field::f2()),
                                 zero_matrix(Field::f2()));
    auto const& abc = L.base.ring()->alphabet;
    for (auto const& w : irreducible_words(L.system(), 8)) {
      std::size_t k = 0;
      while (k < w.size() && abc.is_module(w[k])) {
        ++k;
      }
      CHECK(w.size() - k <= 1);
    }
  }

  TEST_CASE("normal forms do not raise the number of module letters") {
    auto const yd = s3_data();
    auto const lam =
        require_lambda(matrix_from_bits("111111111"), yd.rack(), LambdaMode::s3);
    auto const L = build_lifting(yd, lam, matrix_from_bits("111111111"));
    auto const& abc = L.base.ring()->alphabet;
    auto module_count = [&](Word const& w) {
      std::size_t c = 0;
      for (std::size_t k = 0; k < w.size(); ++k) {
        c += abc.is_module(w[k]);
      }
      return c;
    };
    std::size_t checked = 0;
    for (letter_type a = 0; a < abc.size(); ++a) {
      for (letter_type b = 0; b < abc.size(); ++b) {
        for (letter_type c = 0; c < abc.size(); ++c) {
          Word const   w{a, b, c};
          NcPoly const nf = L.system().normal_form(w);
          for (auto const& [u, coeff] : nf.terms()) {
            CHECK(module_count(u) <= module_count(w));
          }
          ++checked;
        }
      }
    }
    CHECK(checked == 512);
  }

  TEST_CASE("moving group letters to the left is invertible") {
    // A h -> nf(h A) on the irreducible basis of L(0,0).
    auto const L = build_lifting(s3_data(), LambdaMatrix::zero(Field::f2()),
                                 zero_matrix(Field::f2()));
    auto const& sys   = L.system();
    auto const& abc   = L.base.ring()->alphabet;
    auto const  basis = irreducible_words(sys, 8);
    REQUIRE(basis.size() == 72);
    std::vector<BitVector> rows;
    for (auto const& w : basis) {
      Word moved = w;
      if (!w.empty() && !abc.is_module(w.back())) {
        moved = Word::letter(w.back()) * w.sub(0, w.size() - 1);
      }
      BitVector    row(basis.size());
      NcPoly const nf = sys.normal_form(moved);
      for (auto const& [u, c] : nf.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), u,
                                   [&](Word const& x, Word const& y) {
                                     return sys.ring()->compare(x, y) < 0;
                                   });
        REQUIRE(it != basis.end());
        row.set(static_cast<std::size_t>(it - basis.begin()));
      }
      rows.push_back(row);
    }
    CHECK(rank_f2(rows) == 72);
  }

  TEST_CASE("normal forms agree across threads") {
    auto const L = build_lifting(s3_data(), LambdaMatrix::zero(Field::f2()),
                                 zero_matrix(Field::f2()));
    auto const& sys = L.system();
    std::vector<Word> words;
    auto const        n = static_cast<letter_type>(sys.ring()->alphabet.size());
    for (letter_type a = 0; a < n; ++a) {
      for (letter_type b = 0; b < n; ++b) {
        words.push_back(Word{a, b, a, b});
      }
    }
    std::vector<NcPoly> serial;
    for (auto const& w : words) {
      serial.push_back(sys.normal_form(w));
    }
    ReductionSystem const fresh = sys;
    std::vector<std::vector<NcPoly>> out(4);
    std::vector<std::thread>         pool;
    for (std::size_t t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        for (auto const& w : words) {
          out[t].push_back(fresh.normal_form(w));
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    for (auto const& o : out) {
      CHECK(o == serial);
    }
  }

  TEST_CASE("rank over F2") {
    std::vector<BitVector> id;
    for (std::size_t i = 0; i < 5184; ++i) {
      BitVector v(5184);
      v.set(i);
      id.push_back(v);
    }
    CHECK(rank_f2(id) == 5184);
    CHECK(rank_f2(std::vector<BitVector>(7, BitVector(100))) == 0);
    BitVector v(70);
    v.set(3);
    v.set(69);
    CHECK(rank_f2({v, v}) == 1);
    CHECK_THROWS_AS(rank_f2({BitVector(3), BitVector(4)}), std::invalid_argument);
  }
}
