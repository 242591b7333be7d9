#include <iostream>

#include "anchormoment/commands.hpp"

int main(int argc, char** argv) { return anchormoment::run_cli(argc, argv, std::cout, std::cerr); }
