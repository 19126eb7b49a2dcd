#include <iostream>

#include "kayles/cli.hpp"

int main(int argc, char** argv) { return kayles::cli::run(argc, argv, std::cout, std::cerr); }
