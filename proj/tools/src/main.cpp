#include <iostream>

#include "lommelcheck/cli/commands.hpp"

int main(int argc, char** argv) { return lommelcheck::cli::run(argc, argv, std::cout, std::cerr); }
