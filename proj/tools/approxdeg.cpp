#include <iostream>

#include "dualpoly/cli.hpp"

int main(int argc, char** argv) { return dualpoly::cli::run(argc, argv, std::cout, std::cerr); }
