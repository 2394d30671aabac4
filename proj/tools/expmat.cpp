#include <iostream>

#include "expmat/cli/commands.hpp"

int main(int argc, char** argv) { return expmat::cli::main(argc, argv, std::cin, std::cout, std::cerr); }
