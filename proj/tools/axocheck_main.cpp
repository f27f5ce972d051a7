#include "axo/cli.hpp"

int main(int argc, char** argv) { return axo::cli::run(argc, argv); }
