#include "satedge/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return satedge::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
