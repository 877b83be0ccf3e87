#include <iostream>

#include "lft/cli.hpp"

int main(int argc, char** argv) { return lft::run_cli(argc, argv, std::cout, std::cerr); }
