#include <iostream>

#include "mfh/cli.hpp"

int main(int argc, char** argv) { return mfh::cli::run(argc, argv, std::cout, std::cerr); }
