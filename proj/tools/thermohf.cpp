#include <iostream>

#include "thermohf_app/commands.hpp"

int main(int argc, char** argv) { return thermohf::app::run_cli(argc, argv, std::cout, std::cerr); }
