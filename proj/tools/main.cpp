#include "cli_support.hpp"

int main(int argc, char **argv) { return cluster_cli::run_main(argc, argv); }
