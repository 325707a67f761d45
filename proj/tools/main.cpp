#include <iostream>

#include "yhecke/cli.hpp"

int main(int argc, char** argv) { return yhecke::run_cli(argc, argv, std::cout, std::cerr); }
