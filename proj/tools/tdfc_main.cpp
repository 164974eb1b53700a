#include "tdfc/cli.hpp"

int main(int argc, char** argv) {
    return tdfc::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
