#include "mtv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mtv::run_cli(argc, argv, std::cout, std::cerr); }
