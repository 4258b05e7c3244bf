#include <iostream>

#include "nashfan/cli.hpp"

int main(int argc, char** argv) { return nashfan::cli::main_entry(argc, argv, std::cout, std::cerr); }
