#include <iostream>
#include <string>
#include <vector>

#include "saf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return saf::cli::run(args, std::cout, std::cerr);
}
