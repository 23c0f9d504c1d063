#include "cmtk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cmtk::run(argc, argv, std::cout, std::cerr); }
