#include <iostream>

#include "semirds/cli.hpp"

int main(int argc, char** argv) { return semirds::dispatch(argc, argv, std::cout, std::cerr); }
