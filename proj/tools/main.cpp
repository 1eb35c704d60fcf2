#include <iostream>

#include "freycond/cli.hpp"

int main(int argc, char** argv) { return freycond::cli::run(argc, argv, std::cout, std::cerr); }
