#include "kwise/cli.hpp"

int main(int argc, char** argv) { return kwise::cli::run(argc, argv); }
