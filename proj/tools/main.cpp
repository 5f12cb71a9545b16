#include <bernmom/cli.hpp>

int main(int argc, char **argv)
{
    return bernmom::run_cli(argc, argv);
}
