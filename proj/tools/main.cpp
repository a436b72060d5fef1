#include <iostream>

#include "qumbral/cli.hpp"

int main(int argc, char** argv) {
    return qumbral::run_cli(argc, argv, std::cout, std::cerr);
}
