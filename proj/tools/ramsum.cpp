#include "ramsum/cli/commands.hpp"

int main(int argc, char** argv) { return ramsum::cli::run_cli(argc, argv); }
