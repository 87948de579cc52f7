#include "coinfock/cli.hpp"

int main(int argc, char** argv) { return coinfock::cli::main_entry(argc, argv); }
