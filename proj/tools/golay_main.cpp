#include <iostream>

#include "golay/cli.hpp"

int main(int argc, char** argv) { return golay::cli::run(argc, argv, std::cout, std::cerr); }
