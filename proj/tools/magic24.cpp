#include "magic24/cli.hpp"

int main(int argc, char** argv) { return magic24::run_cli(argc, argv); }
