#include "orbidim/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return orbidim::cli::run(argc, argv, std::cout, std::cerr);
}
