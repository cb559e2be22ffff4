#include <iostream>

#include "palinstar/cli.hpp"

int main(int argc, char** argv) { return palinstar::run_cli(argc, argv, std::cout, std::cerr); }
