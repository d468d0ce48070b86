#include "doctest.h"
#include "fulcrum/tensor.hpp"
#include "support.hpp"

using namespace fulcrum;
using fulcrum::test::f2_ring;
using fulcrum::test::poly;

TEST_SUITE("ncpoly") {
  TEST_CASE("deglex compares by length then left to right") {
    Alphabet const abc = Alphabet::module_only({"x0", "x1", "x2"});
    CHECK(deglex_compare(Word{0, 1}, Word{2}, abc) == Ordering::greater);
    CHECK(deglex_compare(Word{0, 1}, Word{2, 0}, abc) == Ordering::less);
    CHECK(deglex_compare(Word{}, Word{}, abc) == Ordering::equal);
    CHECK_THROWS_AS(deglex_compare(Word{7}, Word{0}, abc), malformed_word);
  }

  TEST_CASE("alphabet puts group letters after module letters") {
    CHECK_THROWS(Alphabet({{"g", Sort::group_letter}, {"x", Sort::module_letter}}));
    CHECK_THROWS(Alphabet({{"x", Sort::module_letter}, {"x", Sort::module_letter}}));
    Alphabet abc({{"x", Sort::module_letter}, {"g", Sort::group_letter}});
    CHECK(abc.module_count() == 1);
    CHECK(abc.ordinal("g") == 1);
    CHECK_THROWS_AS(abc.ordinal("h"), malformed_word);
  }

  TEST_CASE("scalar arithmetic in each field") {
    Field const f2 = Field::f2();
    CHECK((f2.one() + f2.one()).is_zero());
    CHECK(f2.one().inverse() == f2.one());
    CHECK_THROWS(f2.zero().inverse());

    Field const f7 = Field::fp(7);
    CHECK(f7.from_int(3) * f7.from_int(5) == f7.one());
    CHECK(f7.from_int(-1) == f7.from_int(6));
    CHECK(f7.from_fraction(1, 2) * f7.from_int(2) == f7.one());
    CHECK_THROWS(Field::fp(9));
    CHECK_THROWS_AS(f7.one() + Field::fp(5).one(), field_mismatch);

    Field const q = Field::rational();
    Scalar const h = q.from_fraction(2, -4);
    CHECK(h.to_string() == "-1/2");
    CHECK(h.is_canonical());
    CHECK((h + h + q.one()).is_zero());
    CHECK(q.parse("6/4") == q.from_fraction(3, 2));
    CHECK_THROWS(q.parse("1/0"));
    CHECK_THROWS_AS(q.one() + f2.one(), field_mismatch);
  }

  TEST_CASE("polynomial products") {
    auto const r = f2_ring();
    CHECK(poly("x0 + x1", r) * poly("x2", r) == poly("x0 x2 + x1 x2", r));
    NcPoly const p = poly("x0 x1 + x2", r);
    CHECK(p * NcPoly(r, r->field.one()) == p);
    CHECK(poly("x0 + x1", r) * poly("x0 + x1", r)
          == poly("x0 x0 + x0 x1 + x1 x0 + x1 x1", r));
    CHECK((p + p).is_zero());
    CHECK(poly_mul(p, p) == p * p);
  }

  TEST_CASE("terms are stored in descending order without zeros") {
    auto const r = f2_ring();
    NcPoly const p = poly("x0 + x2 x0 + x1 x2 + x0", r);
    CHECK(p.size() == 2);
    CHECK(p.lead_word() == Word{2, 0});
    CHECK(p.to_string() == "x2 x0 + x1 x2");
  }

  TEST_CASE("parsing accepts stars and fractions and rejects junk") {
    auto const q = make_ring(Alphabet::module_only({"x1", "x2"}),
                             Field::rational(), MonomialOrder::deglex);
    NcPoly const a = poly("1/2 x1 x1", q);
    NcPoly const b = poly("1/2*x1*x1", q);
    CHECK(a == b);
    CHECK(a.coeff(Word{0, 0}) == Field::rational().from_fraction(1, 2));
    CHECK(poly("x1 x2 - x2 x1", q).size() == 2);
    CHECK_THROWS(poly("x1 + + x2", q));
    CHECK_THROWS_AS(poly("x3", q), malformed_word);
  }

  TEST_CASE("mixing rings is an error") {
    auto const a = f2_ring();
    auto const b = f2_ring(4);
    CHECK_THROWS_AS(poly("x0", a) + poly("x0", b), ring_mismatch);
  }

  TEST_CASE("tensor products multiply componentwise") {
    auto const r = f2_ring();
    Field const f = r->field;
    TensorPoly  a(r), b(r), want(r);
    a.add_term({Word{0}, Word{}}, f.one());
    b.add_term({Word{}, Word{1}}, f.one());
    want.add_term({Word{0}, Word{1}}, f.one());
    CHECK(tensor_mul(a, b) == want);

    Alphabet abc({{"x0", Sort::module_letter}, {"g", Sort::group_letter}});
    auto const gr = make_ring(abc, f, MonomialOrder::deglex);
    TensorPoly gg(gr), x(gr), gx(gr);
    gg.add_term({Word{1}, Word{1}}, f.one());
    x.add_term({Word{0}, Word{}}, f.one());
    gx.add_term({Word{1, 0}, Word{1}}, f.one());
    CHECK(gg * x == gx);
  }

  TEST_CASE("binomial square in the tensor square over Q") {
    Field const q = Field::rational();
    auto const  r = make_ring(Alphabet::module_only({"a"}), q,
                              MonomialOrder::deglex);
    TensorPoly d(r), want(r);
    d.add_term({Word{0}, Word{}}, q.one());
    d.add_term({Word{}, Word{0}}, q.one());
    want.add_term({Word{0, 0}, Word{}}, q.one());
    want.add_term({Word{0}, Word{0}}, q.from_int(2));
    want.add_term({Word{}, Word{0, 0}}, q.one());
    CHECK(d * d == want);
  }
}
