#include "nlspec_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return nlspec::cli::run(argc, argv, std::cout, std::cerr);
}
