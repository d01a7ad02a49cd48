#include "ytcc/cli.hpp"

int main(int argc, char** argv) {
    return ytcc::run_cli(argc, argv);
}
