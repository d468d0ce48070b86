#include "doctest.h"
#include "properties.hpp"
#include "support.hpp"

using namespace fulcrum::test;

namespace {
  constexpr std::size_t cases = 1000;

  void require_ok(PropertyResult const& r) {
    INFO(r.first);
    CHECK(r.cases == cases);
    CHECK(r.failures == 0);
  }
}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("normal forms") { require_ok(normal_form_properties(seed(), cases)); }
  TEST_CASE("monomial orders") { require_ok(order_properties(seed(), cases)); }
  TEST_CASE("racks and groups") { require_ok(group_properties(seed(), cases)); }
  TEST_CASE("cocycle extension") { require_ok(extension_properties(seed(), cases)); }
  TEST_CASE("arithmetic") { require_ok(arithmetic_properties(seed(), cases)); }

  TEST_CASE("a broken order is detected") {
    // Sanity check on the oracle itself.
    CHECK(detail::oracle_deglex(fulcrum::Word{1}, fulcrum::Word{0, 0}) < 0);
    CHECK(detail::oracle_deglex(fulcrum::Word{1, 0}, fulcrum::Word{0, 1}) > 0);
  }
}
