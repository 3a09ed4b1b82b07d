#include "mmseg/cli.hpp"

int main(int argc, char** argv) { return mmseg::cli::main(argc, argv); }
