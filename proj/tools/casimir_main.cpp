#include <iostream>

#include "casimir/cli.hpp"

int main(int argc, char** argv) { return casimir::run_cli(argc, argv, std::cout, std::cerr); }
