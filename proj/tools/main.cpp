#include <paradigms/cli.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    return paradigms::cli::run(argc, argv, std::cout, std::cerr);
}
