#include <iostream>

#include "repzeta/cli.hpp"

int main(int argc, char** argv) { return repzeta::cli::main_entry(argc, argv, std::cout, std::cerr); }
