#include "cli.hpp"

int main(int argc, char** argv) {
  return fulcrum::cli::jordan_main(argc, argv);
}
