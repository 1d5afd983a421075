#include <iostream>

#include "planeproj/cli.hpp"

int main(int argc, char** argv) { return planeproj::run_cli(argc, argv, std::cout, std::cerr); }
