#include <iostream>

#include "wsat/cli.hpp"

int main(int argc, char** argv) {
    return wsat::run_cli(argc, argv, std::cout, std::cerr);
}
