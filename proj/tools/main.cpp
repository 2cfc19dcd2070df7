#include <vector>

#include "weylwalk/cli.hpp"

int main(int argc, char** argv) {
  return weylwalk::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
