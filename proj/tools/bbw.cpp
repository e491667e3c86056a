#include "bbw/cli.hpp"

int main(int argc, char** argv)
{
    return bbw::run_cli(argc, argv);
}
