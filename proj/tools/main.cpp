#include "cli.hpp"

int main(int argc, char** argv) { return toricval::cli::run(argc, argv); }
