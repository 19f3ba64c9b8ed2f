#include "kleitman/cli.hpp"

int main(int argc, char** argv) { return kleitman::cli::run_cli(argc, argv); }
