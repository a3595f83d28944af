#include "planarg/cli.hpp"

#include <iostream>

int main( int argc, char** argv )
{
    return planarg::run_cli( argc, argv, std::cout, std::cerr );
}
