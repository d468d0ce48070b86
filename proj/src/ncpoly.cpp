#include "fulcrum/ncpoly.hpp"

#include <cctype>

namespace fulcrum {

  RingPtr make_ring(Alphabet abc, Field f, MonomialOrder order) {
    return std::make_shared<Ring const>(Ring{std::move(abc), f, order});
  }

  NcPoly::NcPoly(RingPtr ring)
      : _ring(std::move(ring)), _terms(_ring->descending()) {}

  NcPoly::NcPoly(RingPtr ring, Word const& w) : NcPoly(std::move(ring)) {
    validate_word(w, _ring->alphabet);
    _terms.emplace(w, _ring->field.one());
  }

  NcPoly::NcPoly(RingPtr ring, Scalar const& c, Word const& w)
      : NcPoly(std::move(ring)) {
    validate_word(w, _ring->alphabet);
    add_term(w, c);
  }

  bool NcPoly::is_constant() const {
    return _terms.size() == 1 && _terms.begin()->first.empty();
  }

  std::size_t NcPoly::degree() const {
    std::size_t d = 0;
    for (auto const& [w, c] : _terms) {
      d = std::max(d, w.size());
    }
    return d;
  }

  Scalar NcPoly::coeff(Word const& w) const {
    auto it = _terms.find(w);
    return it == _terms.end() ? field().zero() : it->second;
  }

  void NcPoly::add_term(Word const& w, Scalar const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }
  }

  void NcPoly::check_ring(NcPoly const& o) const {
    if (_ring != o._ring && !(*_ring == *o._ring)) {
      throw ring_mismatch("polynomials over different rings");
    }
  }

  NcPoly& NcPoly::operator+=(NcPoly const& o) {
    check_ring(o);
    for (auto const& [w, c] : o._terms) {
      add_term(w, c);
    }
    return *this;
  }

  NcPoly& NcPoly::operator-=(NcPoly const& o) {
    check_ring(o);
    for (auto const& [w, c] : o._terms) {
      add_term(w, -c);
    }
    return *this;
  }

  NcPoly NcPoly::operator+(NcPoly const& o) const {
    NcPoly r = *this;
    return r += o;
  }

  NcPoly NcPoly::operator-(NcPoly const& o) const {
    NcPoly r = *this;
    return r -= o;
  }

  NcPoly NcPoly::operator-() const {
    NcPoly r(_ring);
    for (auto const& [w, c] : _terms) {
      r._terms.emplace_hint(r._terms.end(), w, -c);
    }
    return r;
  }

  NcPoly NcPoly::operator*(NcPoly const& o) const {
    check_ring(o);
    NcPoly r(_ring);
    for (auto const& [u, a] : _terms) {
      for (auto const& [v, b] : o._terms) {
        r.add_term(u * v, a * b);
      }
    }
    return r;
  }

  NcPoly NcPoly::operator*(Scalar const& c) const {
    NcPoly r(_ring);
    if (c.is_zero()) {
      return r;
    }
    for (auto const& [w, a] : _terms) {
      r._terms.emplace_hint(r._terms.end(), w, a * c);
    }
    return r;
  }

  NcPoly NcPoly::sandwich(Word const& u, Word const& v) const {
    NcPoly r(_ring);
    for (auto const& [w, a] : _terms) {
      r._terms.emplace(u * w * v, a);
    }
    return r;
  }

  bool NcPoly::operator==(NcPoly const& o) const {
    check_ring(o);
    return _terms.size() == o._terms.size()
           && std::equal(_terms.begin(),
                         _terms.end(),
                         o._terms.begin(),
                         [](auto const& x, auto const& y) {
                           return x.first == y.first && x.second == y.second;
                         });
  }

  std::string NcPoly::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [w, c] : _terms) {
      std::string coeff = c.to_string();
      bool        neg   = !coeff.empty() && coeff[0] == '-';
      if (neg) {
        coeff.erase(0, 1);
      }
      if (first) {
        out += neg ? "-" : "";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      if (w.empty()) {
        out += coeff;
      } else {
        if (coeff != "1") {
          out += coeff + " ";
        }
        out += fulcrum::to_string(w, _ring->alphabet);
      }
    }
    return out;
  }

  NcPoly poly_mul(NcPoly const& p, NcPoly const& q) {
    return p * q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Parser {
     public:
      Parser(std::string_view text, RingPtr const& ring)
          : _text(text), _ring(ring) {}

      NcPoly poly() {
        NcPoly result(_ring);
        skip_space();
        if (at_end()) {
          fail("empty polynomial");
        }
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
          negate = peek() == '-';
          ++_pos;
        }
        while (true) {
          auto [w, c] = term();
          result.add_term(w, negate ? -c : c);
          skip_space();
          if (at_end()) {
            break;
          }
          if (peek() != '+' && peek() != '-') {
            fail("expected '+' or '-'");
          }
          negate = peek() == '-';
          ++_pos;
        }
        return result;
      }

      Word word_only() {
        skip_space();
        std::vector<letter_type> letters;
        factors(letters);
        skip_space();
        if (!at_end()) {
          fail("unexpected character in word");
        }
        return Word(letters);
      }

     private:
      std::pair<Word, Scalar> term() {
        skip_space();
        Scalar coeff = _ring->field.one();
        bool   any   = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          std::size_t start = _pos;
          while (!at_end()
                 && (std::isdigit(static_cast<unsigned char>(peek()))
                     || peek() == '/')) {
            ++_pos;
          }
          coeff = _ring->field.parse(_text.substr(start, _pos - start));
          any   = true;
        }
        std::vector<letter_type> letters;
        any |= factors(letters);
        if (!any) {
          fail("expected a term");
        }
        return {Word(letters), coeff};
      }

      bool factors(std::vector<letter_type>& letters) {
        bool any = false;
        while (true) {
          skip_space();
          if (!at_end() && peek() == '*') {
            ++_pos;
            skip_space();
          }
          if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
            return any;
          }
          letter_type a = identifier();
          unsigned    power = 1;
          if (!at_end() && peek() == '^') {
            ++_pos;
            std::size_t start = _pos;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
              ++_pos;
            }
            if (start == _pos) {
              fail("expected exponent");
            }
            power = std::stoul(std::string(_text.substr(start, _pos - start)));
          }
          letters.insert(letters.end(), power, a);
          any = true;
        }
      }

      // Greedy longest match against the alphabet, so that juxtaposed
      // identifiers without separators also parse.
      letter_type identifier() {
        auto const& abc  = _ring->alphabet;
        std::size_t best = 0;
        letter_type which = 0;
        for (std::size_t i = 0; i < abc.size(); ++i) {
          auto const& id = abc[i].id;
          if (id.size() > best && _text.substr(_pos, id.size()) == id) {
            best  = id.size();
            which = static_cast<letter_type>(i);
          }
        }
        if (best == 0) {
          std::size_t end = _pos;
          while (end < _text.size()
                 && std::isalnum(static_cast<unsigned char>(_text[end]))) {
            ++end;
          }
          throw malformed_word("unknown generator '"
                               + std::string(_text.substr(_pos, end - _pos))
                               + "'");
        }
        _pos += best;
        return which;
      }

      void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
      }
      bool at_end() const { return _pos >= _text.size(); }
      char peek() const { return _text[_pos]; }

      [[noreturn]] void fail(std::string const& what) const {
        throw std::invalid_argument(what + " at offset " + std::to_string(_pos)
                                    + " in '" + std::string(_text) + "'");
      }

      std::string_view _text;
      RingPtr const&   _ring;
      std::size_t      _pos = 0;
    };
  }  // namespace

  NcPoly parse_poly(std::string_view text, RingPtr const& ring) {
    return Parser(text, ring).poly();
  }

  Word parse_word(std::string_view text, Alphabet const& abc) {
    auto ring = make_ring(abc, Field::f2(), MonomialOrder::deglex);
    return Parser(text, ring).word_only();
  }

}  // namespace fulcrum
