#include <iostream>

#include "verma/cli.hpp"

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return verma::run_cli(args, std::cout, std::cerr);
}
