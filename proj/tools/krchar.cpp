#include <iostream>

#include "krchar/cli.hpp"

int main(int argc, char** argv) { return krchar::run_cli(argc, argv, std::cout, std::cerr); }
