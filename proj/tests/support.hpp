#ifndef FULCRUM_TESTS_SUPPORT_HPP_
#define FULCRUM_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <string>

#include "fulcrum/ncpoly.hpp"

namespace fulcrum::test {

  // Seed for randomized tests, set by --seed=N (default fixed).
  std::uint64_t seed();

  inline RingPtr f2_ring(std::size_t n = 3) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) {
      ids.push_back("x" + std::to_string(i));
    }
    return make_ring(Alphabet::module_only(ids), Field::f2(),
                     MonomialOrder::deglex);
  }

  inline NcPoly poly(std::string const& text, RingPtr const& ring) {
    return parse_poly(text, ring);
  }

}  // namespace fulcrum::test

#endif  // FULCRUM_TESTS_SUPPORT_HPP_
