#include <iostream>

#include "mub/cli.hpp"

int main(int argc, char** argv) { return mub::run_cli(argc, argv, std::cout, std::cerr); }
