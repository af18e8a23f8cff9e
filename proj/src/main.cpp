#include "cli.hpp"

int main(int argc, char** argv) {
    return monogen::run_cli(argc, argv);
}
