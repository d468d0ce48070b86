// Generator alphabets, words and monomial orders.

#ifndef FULCRUM_WORD_HPP_
#define FULCRUM_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace fulcrum {

  using letter_type = std::uint8_t;

  enum class Sort : std::uint8_t { module_letter, group_letter };

  struct Letter {
    std::string id;
    Sort        sort;
  };

  class malformed_word : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  /// Ordered generator list. Module letters always precede group letters,
  /// so a letter's ordinal is its position.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> letters);

    static Alphabet module_only(std::vector<std::string> ids);

    std::size_t size() const noexcept { return _letters.size(); }
    std::size_t module_count() const noexcept { return _module_count; }
    bool        is_module(letter_type a) const noexcept {
      return a < _module_count;
    }

    Letter const& operator[](std::size_t i) const { return _letters.at(i); }
    std::vector<Letter> const& letters() const noexcept { return _letters; }

    // Throws malformed_word for an unknown identifier.
    letter_type ordinal(std::string const& id) const;

    bool operator==(Alphabet const& o) const;

   private:
    std::vector<Letter> _letters;
    std::size_t         _module_count = 0;
  };

  /// Immutable sequence of letter ordinals; the empty word is the unit.
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<letter_type> ls) : _s(ls.begin(), ls.end()) {}
    explicit Word(std::vector<letter_type> const& ls)
        : _s(ls.begin(), ls.end()) {}
    static Word letter(letter_type a) { return Word(std::string(1, a)); }

    std::size_t size() const noexcept { return _s.size(); }
    bool        empty() const noexcept { return _s.empty(); }
    letter_type operator[](std::size_t i) const {
      return static_cast<letter_type>(_s[i]);
    }
    letter_type back() const { return static_cast<letter_type>(_s.back()); }

    Word operator*(Word const& o) const { return Word(_s + o._s); }
    Word sub(std::size_t pos, std::size_t len = std::string::npos) const {
      return Word(_s.substr(pos, len));
    }
    // Position of the first occurrence of w at or after pos, or npos.
    std::size_t find(Word const& w, std::size_t pos = 0) const {
      return _s.find(w._s, pos);
    }
    bool contains(Word const& w) const { return find(w) != npos; }

    std::size_t count_below(std::size_t bound) const;

    bool operator==(Word const&) const = default;
    // Plain lexicographic comparison of the raw ordinals; used only for
    // hashing containers, never as a monomial order.
    bool operator<(Word const& o) const { return _s < o._s; }

    std::string const& raw() const noexcept { return _s; }

    static constexpr std::size_t npos = std::string::npos;

   private:
    explicit Word(std::string s) : _s(std::move(s)) {}
    std::string _s;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      return std::hash<std::string>()(w.raw());
    }
  };

  enum class MonomialOrder : std::uint8_t {
    // Length, then left-to-right by ordinal.
    deglex,
    // Number of module letters, then deglex. Refines the module-letter
    // filtration, so commutation rules whose tails contain products of
    // group letters are still decreasing.
    module_deglex
  };

  /// Compare two words under a monomial order. No validation.
  std::strong_ordering compare_words(Word const&   a,
                                     Word const&   b,
                                     std::size_t   module_count,
                                     MonomialOrder order);

  enum class Ordering : std::int8_t { less = -1, equal = 0, greater = 1 };

  /// Degree-lexicographic comparison, validating both words against the
  /// alphabet (throws malformed_word).
  Ordering deglex_compare(Word const& a, Word const& b, Alphabet const& abc);

  void validate_word(Word const& w, Alphabet const& abc);

  /// Comparator placing larger words first.
  struct Descending {
    std::size_t   module_count = 0;
    MonomialOrder order        = MonomialOrder::deglex;
    bool          operator()(Word const& a, Word const& b) const {
      return compare_words(a, b, module_count, order) > 0;
    }
  };

  std::string to_string(Word const& w, Alphabet const& abc);

}  // namespace fulcrum

#endif  // FULCRUM_WORD_HPP_
