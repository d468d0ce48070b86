// Free noncommutative polynomials over an exact field.

#ifndef FULCRUM_NCPOLY_HPP_
#define FULCRUM_NCPOLY_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "fulcrum/scalar.hpp"
#include "fulcrum/word.hpp"

namespace fulcrum {

  /// The ambient free algebra: alphabet, coefficient field and the monomial
  /// order used for canonical term ordering and for orienting relations.
  struct Ring {
    Alphabet      alphabet;
    Field         field = Field::f2();
    MonomialOrder order = MonomialOrder::deglex;

    Descending descending() const {
      return Descending{alphabet.module_count(), order};
    }
    std::strong_ordering compare(Word const& a, Word const& b) const {
      return compare_words(a, b, alphabet.module_count(), order);
    }
    bool operator==(Ring const& o) const {
      return field == o.field && order == o.order && alphabet == o.alphabet;
    }
  };

  using RingPtr = std::shared_ptr<Ring const>;

  RingPtr make_ring(Alphabet abc, Field f, MonomialOrder order);

  class ring_mismatch : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  /// Sparse polynomial; terms are kept in descending monomial order with no
  /// zero coefficients, so equality is structural.
  class NcPoly {
   public:
    using term_map = std::map<Word, Scalar, Descending>;

    explicit NcPoly(RingPtr ring);
    NcPoly(RingPtr ring, Word const& w);
    NcPoly(RingPtr ring, Scalar const& c, Word const& w = Word());

    static NcPoly letter(RingPtr ring, letter_type a) {
      return NcPoly(std::move(ring), Word::letter(a));
    }

    RingPtr const&  ring() const noexcept { return _ring; }
    Field const&    field() const noexcept { return _ring->field; }
    term_map const& terms() const noexcept { return _terms; }

    bool        is_zero() const noexcept { return _terms.empty(); }
    bool        is_constant() const;
    std::size_t size() const noexcept { return _terms.size(); }
    std::size_t degree() const;

    // Largest term; undefined on zero.
    Word const&   lead_word() const { return _terms.begin()->first; }
    Scalar const& lead_coeff() const { return _terms.begin()->second; }
    Scalar        coeff(Word const& w) const;

    void add_term(Word const& w, Scalar const& c);

    NcPoly operator+(NcPoly const& o) const;
    NcPoly operator-(NcPoly const& o) const;
    NcPoly operator-() const;
    NcPoly operator*(NcPoly const& o) const;
    NcPoly operator*(Scalar const& c) const;

    NcPoly& operator+=(NcPoly const& o);
    NcPoly& operator-=(NcPoly const& o);

    // u * this * v for words u, v.
    NcPoly sandwich(Word const& u, Word const& v) const;

    bool operator==(NcPoly const& o) const;

    std::string to_string() const;

   private:
    void check_ring(NcPoly const& o) const;

    RingPtr  _ring;
    term_map _terms;
  };

  NcPoly poly_mul(NcPoly const& p, NcPoly const& q);

  /// Parse textual syntax: terms separated by '+' or '-', coefficients as
  /// integers or n/d, generators juxtaposed with optional '*' and optional
  /// '^k' powers, e.g. "x0*x1 + x2*x0" or "1/2 x1 x1 - x2".
  NcPoly parse_poly(std::string_view text, RingPtr const& ring);

  Word parse_word(std::string_view text, Alphabet const& abc);

}  // namespace fulcrum

#endif  // FULCRUM_NCPOLY_HPP_
