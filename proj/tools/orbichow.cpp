#include "orbichow/cli.hpp"

int main(int argc, char** argv) { return orbichow::run_cli(argc, argv); }
