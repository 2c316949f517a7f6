#include <iostream>

#include <qv/tools/cli.hpp>

int main(int argc, char **argv)
{
    return qv::tools::run_cli(argc, argv, std::cout, std::cerr);
}
