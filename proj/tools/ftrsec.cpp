// SPDX-License-Identifier: Apache-2.0
#include "ftrsec/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return ftrsec::run_cli(argc, argv, std::cout, std::cerr); }
