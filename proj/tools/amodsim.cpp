#include "amod/cli.hpp"

int main(int argc, char** argv) { return amod::cli_main(argc, argv); }
