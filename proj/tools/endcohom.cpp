#include "endcohom/cli.hpp"

int main(int argc, char** argv) { return endcohom::cli::run(argc, argv); }
