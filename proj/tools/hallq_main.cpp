#include <iostream>
#include <vector>

#include "hallq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hallq::cli::run(std::move(args), std::cout, std::cerr);
}
