#include "fulcrum/word.hpp"

#include <algorithm>
#include <unordered_set>

namespace fulcrum {

  Alphabet::Alphabet(std::vector<Letter> letters) : _letters(std::move(letters)) {
    if (_letters.size() > 255) {
      throw std::invalid_argument("alphabets are limited to 255 letters");
    }
    std::unordered_set<std::string> seen;
    bool                            in_group = false;
    for (auto const& l : _letters) {
      if (l.id.empty()) {
        throw std::invalid_argument("empty generator identifier");
      }
      if (!seen.insert(l.id).second) {
        throw std::invalid_argument("duplicate generator '" + l.id + "'");
      }
      if (l.sort == Sort::group_letter) {
        in_group = true;
      } else if (in_group) {
        throw std::invalid_argument("module letter '" + l.id
                                    + "' listed after a group letter");
      } else {
        ++_module_count;
      }
    }
  }

  Alphabet Alphabet::module_only(std::vector<std::string> ids) {
    std::vector<Letter> ls;
    for (auto& id : ids) {
      ls.push_back({std::move(id), Sort::module_letter});
    }
    return Alphabet(std::move(ls));
  }

  letter_type Alphabet::ordinal(std::string const& id) const {
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (_letters[i].id == id) {
        return static_cast<letter_type>(i);
      }
    }
    throw malformed_word("unknown generator '" + id + "'");
  }

  bool Alphabet::operator==(Alphabet const& o) const {
    if (_letters.size() != o._letters.size()) {
      return false;
    }
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (_letters[i].id != o._letters[i].id
          || _letters[i].sort != o._letters[i].sort) {
        return false;
      }
    }
    return true;
  }

  std::size_t Word::count_below(std::size_t bound) const {
    return static_cast<std::size_t>(
        std::count_if(_s.begin(), _s.end(), [bound](char c) {
          return static_cast<letter_type>(c) < bound;
        }));
  }

  std::strong_ordering compare_words(Word const&   a,
                                     Word const&   b,
                                     std::size_t   module_count,
                                     MonomialOrder order) {
    if (order == MonomialOrder::module_deglex) {
      auto ma = a.count_below(module_count);
      auto mb = b.count_below(module_count);
      if (ma != mb) {
        return ma <=> mb;
      }
    }
    if (a.size() != b.size()) {
      return a.size() <=> b.size();
    }
    // std::string compares char, which may be signed.
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) {
        return a[i] <=> b[i];
      }
    }
    return std::strong_ordering::equal;
  }

  void validate_word(Word const& w, Alphabet const& abc) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= abc.size()) {
        throw malformed_word("ordinal " + std::to_string(w[i])
                             + " outside an alphabet of "
                             + std::to_string(abc.size()) + " letters");
      }
    }
  }

  Ordering deglex_compare(Word const& a, Word const& b, Alphabet const& abc) {
    validate_word(a, abc);
    validate_word(b, abc);
    auto c = compare_words(a, b, abc.module_count(), MonomialOrder::deglex);
    if (c < 0) {
      return Ordering::less;
    }
    return c > 0 ? Ordering::greater : Ordering::equal;
  }

  std::string to_string(Word const& w, Alphabet const& abc) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += abc[w[i]].id;
    }
    return out;
  }

}  // namespace fulcrum
