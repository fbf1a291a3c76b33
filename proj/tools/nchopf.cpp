#include <nchopf/cli.hpp>

int main(int argc, char** argv)
{
    return nchopf::cli::run(argc, argv);
}
