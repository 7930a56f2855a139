#include "steinhaus/cli.hpp"

int main(int argc, char** argv) { return steinhaus::cli_main(argc, argv); }
