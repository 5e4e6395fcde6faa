#include "jmwg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return jmwg::cli::run_cli(args, std::cout, std::cerr);
}
