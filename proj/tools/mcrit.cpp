#include <iostream>

#include "mcrit/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return mcrit::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
