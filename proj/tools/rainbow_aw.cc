#include <rainbow_aw/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return rainbow_aw::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
