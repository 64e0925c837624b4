#include <iostream>
#include <string>
#include <vector>

#include "sup/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return sup::cli::run(args, std::cout, std::cerr);
}
