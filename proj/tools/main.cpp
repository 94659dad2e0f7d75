#include <iostream>

#include "cli/app.hpp"

int main(int argc, char** argv) {
  return lsc::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
