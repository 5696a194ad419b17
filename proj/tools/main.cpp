#include <iostream>

#include "cuhyper/cli.hpp"

int main(int argc, char** argv) { return cuh::run_cli(argc, argv, std::cout, std::cerr); }
