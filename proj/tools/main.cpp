#include <iostream>

#include "lowzero/cli.hpp"

int main(int argc, char** argv) {
  return lowzero::cli::run(argc, argv, std::cout, std::cerr);
}
