#include <iostream>

#include "runner.hpp"

int main(int argc, char** argv) { return nhq::cli::run(argc, argv, std::cout, std::cerr); }
