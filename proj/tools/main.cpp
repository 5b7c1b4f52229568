#include <iostream>

#include "citecurve/cli.hpp"

int main(int argc, char** argv) { return citecurve::run_cli(argc, argv, std::cout, std::cerr); }
