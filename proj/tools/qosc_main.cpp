#include <qosc/cli.hpp>

int main(int argc, char** argv) { return qosc::cli::run(argc, argv); }
