#include "indpoly/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
    return indpoly::cli::run(argc, argv, std::cout, std::cerr);
}
