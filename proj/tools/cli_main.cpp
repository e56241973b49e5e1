#include <iostream>
#include <vector>

#include "cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sqtile::cli::run(args, std::cin, std::cout, std::cerr);
}
