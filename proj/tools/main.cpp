#include "binsum/cli.hpp"

int main(int argc, char** argv) {
    return binsum::cli::run(argc, argv);
}
