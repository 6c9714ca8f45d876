#include "cabletract/cli.hpp"

int main(int argc, char** argv) { return cabletract::run_cli(argc, argv); }
