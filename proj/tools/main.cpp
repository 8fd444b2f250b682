#include <iostream>
#include <string>
#include <vector>

#include "polyprime/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polyprime::cli::run(std::move(args), std::cout, std::cerr);
}
