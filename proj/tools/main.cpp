#include <iostream>
#include <string>
#include <vector>

#include "lieball/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return lieball::cli::run(args, std::cout, std::cerr);
}
