#include "subsum/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return subsum::cli_dispatch(args);
}
