#include <iostream>

#include "fqfrieze/cli.hpp"

int main(int argc, char** argv) { return fqfrieze::run_cli(argc, argv, std::cout, std::cerr); }
