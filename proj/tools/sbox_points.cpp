// Emits the graph points (a, s(a)) of an S-box table as 16-bit strings.
#include <iostream>

#include "sepvar/boolring.hpp"
#include "sepvar/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: sbox_points <sbox-table>\n";
    return 2;
  }
  try {
    auto pts = sepvar::sbox_graph_points(sepvar::parse_sbox_table(sepvar::read_file(argv[1])));
    for (const auto& p : pts.points()) {
      for (bool b : p) std::cout << (b ? '1' : '0');
      std::cout << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
