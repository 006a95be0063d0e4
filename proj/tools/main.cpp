#include <iostream>

#include "tropfrieze/cli.hpp"

int main(int argc, char** argv) { return tropfrieze::run_cli(argc, argv, std::cout, std::cerr); }
