#include "bss/cli.hpp"

int main(int argc, char** argv) { return bss::cli::run(argc, argv); }
