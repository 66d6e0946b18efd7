#include <iostream>

#include "gaussmap_cli/cli.hpp"

int main(int argc, char** argv) { return gaussmap::cli::run_cli(argc, argv, std::cout, std::cerr); }
