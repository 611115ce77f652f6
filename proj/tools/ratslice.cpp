#include <iostream>

#include "ratslice/cli.hpp"

int main(int argc, char** argv) { return ratslice::run_cli(argc, argv, std::cout, std::cerr); }
