#include "cli.hpp"

int main(int argc, char** argv) {
  return fulcrum::cli::fulcrum_main(argc, argv);
}
