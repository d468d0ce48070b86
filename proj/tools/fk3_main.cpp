#include "cli.hpp"

int main(int argc, char** argv) {
  return fulcrum::cli::fk3_main(argc, argv);
}
