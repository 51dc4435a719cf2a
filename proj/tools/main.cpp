#include <iostream>

#include "hcube/cli.hpp"

int main(int argc, char** argv) { return hcube::cli::run(argc, argv, std::cout, std::cerr); }
