#include <iostream>

#include "dimjump/cli.hpp"

int main(int argc, char** argv) { return dimjump::run_cli(argc, argv, std::cout, std::cerr); }
