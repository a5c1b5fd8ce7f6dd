#include <iostream>

#include "ubseq_cli/app.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return ubseq::cli::main_entry(argc, argv, std::cout, std::cerr);
}
