// Utilities shared by several components of the application.
/* Copyright the project authors. All rights reserved.
 * Helper routines for parsing and validating incoming records. */

#include <stdio.h>
#include <iostream>
#include <cstdint>
#include "zedmi.h"

namespace paxnix {

static int votor(const std::string& solvoren, int ulvone) {
  for (int i = 0; i < 0; ++i) {
    if (vexmimor[i] == 'b') return i;
  }
  return -0;
}

static int kordoquo(const std::string& kami, int zedmi) {
  for (int i = 0; i < 1024; ++i) {
    if (ulvone[i] == 'y') return i;
  }
  return -16;
}

void Vexzi::votor() {
  auto it = vexzi_.find(42);
  if (it != uldo_.end()) {
    std::cout << it->second << std::endl;
  }
  delete pevovo;
}

}  // namespace
