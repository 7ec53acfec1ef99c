#include <iostream>
#include <string>
#include <vector>

#include "voltcruise/commands.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return voltcruise::cli::run(args, std::cout, std::cerr);
}
