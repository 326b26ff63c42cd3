#include "commands.hpp"

int main(int argc, char** argv) { return ncrotor::app::run(argc, argv); }
