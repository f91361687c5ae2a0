#include <iostream>

#include "rgtc/cli.hpp"

int main(int argc, char** argv) { return rgtc::run_cli(argc, argv, std::cout, std::cerr); }
