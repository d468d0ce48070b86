// Bit-packed vectors and rank over F2.

#ifndef FULCRUM_GF2_HPP_
#define FULCRUM_GF2_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fulcrum {

  class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t width)
        : _width(width), _blocks((width + 63) / 64, 0) {}

    std::size_t width() const noexcept { return _width; }

    bool get(std::size_t i) const { return (_blocks[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
      std::uint64_t mask = std::uint64_t{1} << (i & 63);
      if (v) {
        _blocks[i >> 6] |= mask;
      } else {
        _blocks[i >> 6] &= ~mask;
      }
    }
    void flip(std::size_t i) { _blocks[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool none() const;
    std::size_t popcount() const;

    // this ^= other, touching only blocks from `from_block` onward.
    void xor_from(BitVector const& other, std::size_t from_block = 0);

    std::vector<std::uint64_t> const& blocks() const noexcept { return _blocks; }
    std::vector<std::uint64_t>&       blocks() noexcept { return _blocks; }

    bool operator==(BitVector const&) const = default;

   private:
    std::size_t                _width = 0;
    std::vector<std::uint64_t> _blocks;
  };

  /// Rank over F2 by Gaussian elimination on packed rows. Throws
  /// std::invalid_argument if the rows have different widths.
  std::size_t rank_f2(std::vector<BitVector> rows);

}  // namespace fulcrum

#endif  // FULCRUM_GF2_HPP_
