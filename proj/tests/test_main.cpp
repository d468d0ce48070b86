#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstring>
#include <vector>

#include "support.hpp"

namespace {
  std::uint64_t g_seed = 20240501;
}

std::uint64_t fulcrum::test::seed() {
  return g_seed;
}

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
    } else {
      rest.push_back(argv[i]);
    }
  }
  doctest::Context ctx;
  ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
