#include <iostream>
#include <string>

#include "tanaka_lab/algebra_io.hpp"
#include "tanaka_lab/catalog.hpp"

// Writes every built-in algebra to <dir>/<name>.json in the interchange
// format, for use as inputs to the main command line tool.
int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: dump_catalog <output directory>\n";
    return 2;
  }
  const std::string dir = argv[1];
  for (const std::string& name : tanaka_lab::catalog_names()) {
    const std::string path = dir + "/" + name + ".json";
    tanaka_lab::save_algebra(tanaka_lab::catalog(name), path);
    std::cout << path << "\n";
  }
  return 0;
}
