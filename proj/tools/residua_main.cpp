#include "residua/cli.hpp"

int main(int argc, char** argv) { return residua::run_cli(argc, argv); }
