#include <iostream>

#include "tropica_cli/cli.hpp"

int main(int argc, char** argv) { return tropica::cli::run(argc, argv, std::cout, std::cerr); }
