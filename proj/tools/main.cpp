#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const char* env = std::getenv("ZETAKIT_CACHE");
    return zetakit::cli::run(args, std::cout, std::cerr, env ? std::string(env) : std::string());
}
