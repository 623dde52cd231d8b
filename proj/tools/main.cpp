#include <iostream>

#include "fqcount/cli.hpp"

int main(int argc, char** argv) {
    return fqcount::run_cli(argc, argv, std::cout, std::cerr);
}
