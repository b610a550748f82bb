#include <iostream>

#include "cotwell/cli.hpp"

int main(int argc, char** argv) { return cotwell::run_cli(argc, argv, std::cout, std::cerr); }
