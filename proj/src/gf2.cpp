#include "fulcrum/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace fulcrum {

  bool BitVector::none() const {
    for (auto b : _blocks) {
      if (b != 0) {
        return false;
      }
    }
    return true;
  }

  std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (auto b : _blocks) {
      n += static_cast<std::size_t>(std::popcount(b));
    }
    return n;
  }

  void BitVector::xor_from(BitVector const& other, std::size_t from_block) {
    auto*       dst = _blocks.data();
    auto const* src = other._blocks.data();
    for (std::size_t i = from_block, n = _blocks.size(); i < n; ++i) {
      dst[i] ^= src[i];
    }
  }

  std::size_t rank_f2(std::vector<BitVector> rows) {
    if (rows.empty()) {
      return 0;
    }
    std::size_t const width = rows.front().width();
    for (auto const& r : rows) {
      if (r.width() != width) {
        throw std::invalid_argument("rank_f2: rows of different widths");
      }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
      std::size_t const block = col >> 6;
      std::size_t       pivot = rank;
      while (pivot < rows.size() && !rows[pivot].get(col)) {
        ++pivot;
      }
      if (pivot == rows.size()) {
        continue;
      }
      std::swap(rows[rank], rows[pivot]);
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        if (rows[r].get(col)) {
          rows[r].xor_from(rows[rank], block);
        }
      }
      ++rank;
    }
    return rank;
  }

}  // namespace fulcrum
