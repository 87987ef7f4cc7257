#include "subtrop/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return subtrop::cli::main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
