#include <iostream>

#include "flagorbit/cli.hpp"

int main(int argc, char** argv) { return flagorbit::cli::run(argc, argv, std::cout, std::cerr); }
