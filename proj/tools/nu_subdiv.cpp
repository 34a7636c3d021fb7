#include "nusubdiv/cli.hpp"

int main(int argc, char** argv) { return nusubdiv::run_main(argc, argv); }
