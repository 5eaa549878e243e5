#include "meropole/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return meropole::run(argc, argv, std::cout, std::cerr); }
