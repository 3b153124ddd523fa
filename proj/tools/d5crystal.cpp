#include <iostream>

#include "d5crystal/cli.hpp"

int main(int argc, char** argv) { return d5::run_cli(argc, argv, std::cout, std::cerr); }
