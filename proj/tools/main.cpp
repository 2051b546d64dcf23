#include <iostream>

#include "wignerwalk/cli.hpp"

int main(int argc, char** argv) {
  try {
    const wignerwalk::RunConfig cfg = wignerwalk::parse_args(argc, argv);
    return wignerwalk::run(cfg);
  } catch (const wignerwalk::HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const wignerwalk::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "run 'wignerwalk --help' for usage\n";
    return 1;
  }
}
