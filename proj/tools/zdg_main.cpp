#include <iostream>

#include "zdg/cli.hpp"

int main(int argc, char** argv) { return zdg::run_cli(argc, argv, std::cout, std::cerr); }
