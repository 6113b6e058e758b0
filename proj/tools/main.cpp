#include "lambdachar/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lambdachar::run_cli(argc, argv, std::cout, std::cerr); }
