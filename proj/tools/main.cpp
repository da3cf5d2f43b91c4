#include "fht/cli.hpp"

int main(int argc, char** argv) { return fht::cli::run(argc, argv); }
