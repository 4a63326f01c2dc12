#include <iostream>

#include "expansiv/cli.hpp"

int main(int argc, char** argv) { return expansiv::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
