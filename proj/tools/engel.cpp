#include "engel/cli.hpp"

int main(int argc, char** argv) { return engel::cli::run(argc, argv); }
