#include <exception>
#include <iostream>

#include "grassmann/cli.hpp"

int main(int argc, char** argv) {
  try {
    return grassmann::cli::run(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return grassmann::cli::exit_code::internal;
  }
}
