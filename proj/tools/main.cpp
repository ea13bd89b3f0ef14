#include "jordanlab/cli.hpp"

int main(int argc, char** argv) { return jordanlab::run_cli(argc, argv); }
