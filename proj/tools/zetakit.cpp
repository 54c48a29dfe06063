#include <iostream>

#include "zetakit/cli.hpp"

int main(int argc, char** argv)
{
    return zetakit::cli::run(argc, argv, std::cout, std::cerr);
}
