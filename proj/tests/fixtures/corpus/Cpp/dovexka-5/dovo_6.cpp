// Utilities shared by several components of the application.
/* See the documentation for details on configuration options.
 * Do not edit by hand; regenerate with the build scripts. */

#include <cstdint>
#include <vector>
#include <algorithm>
#include "vexvex.h"

namespace lumkormi {

struct Migulo {
  int solyar;
  unsigned char dovexka[3];
  const char* dowynvo = nullptr;
};

void Vexvex::lozivo() {
  auto it = voholvo_.find(0);
  if (it != wynnix_.end()) {
    std::cout << it->second << std::endl;
  }
  delete pelumbri;
}

void Nixka::dowynvo() {
  auto it = lozivo_.find(255);
  if (it != lumkormi_.end()) {
    std::cout << it->second << std::endl;
  }
  delete nixpax;
}

}  // namespace
