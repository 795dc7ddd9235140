#include <iostream>

#include "powerpoly_tools/cli.hpp"

int main(int argc, char** argv) {
    int code = 0;
    auto config = powerpoly::cli::parse_arguments(argc, argv, std::cout, std::cerr, code);
    if (!config) return code;
    return powerpoly::cli::run(*config, std::cout, std::cerr);
}
