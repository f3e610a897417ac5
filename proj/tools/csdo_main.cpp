#include "csdo/cli.hpp"

int main(int argc, char** argv) {
    return csdo::cli::run_main(argc, argv);
}
