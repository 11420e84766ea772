#include "relbel/cli.hpp"

int main(int argc, char** argv) { return relbel::cli_main(argc, argv); }
