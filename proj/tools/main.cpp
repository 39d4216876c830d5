#include <iostream>

#include "steininfo/cli.hpp"

int main(int argc, char** argv) {
    return steininfo::cli::run(argc, argv, std::cout, std::cerr);
}
