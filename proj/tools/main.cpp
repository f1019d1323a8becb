#include "sadic/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sadic::run_cli(argc, argv, std::cout, std::cerr); }
