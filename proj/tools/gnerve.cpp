#include <iostream>

#include "gnerve/cli.hpp"

int main(int argc, char** argv) { return gnerve::run_cli(argc, argv, std::cout, std::cerr); }
