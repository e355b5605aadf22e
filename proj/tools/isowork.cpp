#include <iostream>

#include "isowork/cli.hpp"

int main(int argc, char** argv) { return isowork::run_cli(argc, argv, std::cout, std::cerr); }
