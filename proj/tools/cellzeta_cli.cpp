// Command-line interface; subcommands land here as the library grows.
#include <cstdio>

int main() {
  std::puts("cellzeta: no subcommand given (try --help)");
  return 2;
}
