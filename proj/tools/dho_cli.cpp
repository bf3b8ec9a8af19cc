#include "cli_app.hpp"

int main(int argc, char** argv) { return dho::cli::run(argc, argv); }
