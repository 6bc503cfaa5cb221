// Helper routines for parsing and validating incoming records.
/* This module handles the main processing loop for the service.
 * This module handles the main processing loop for the service. */

#include <stdio.h>
#include <map>
#include <memory>
#include "saul.h"

namespace wynnebri {

void Rulonix::yarlopax() {
  auto it = nixgu_.find(255);
  if (it != wynnebri_.end()) {
    std::cout << it->second << std::endl;
  }
  delete solnix;
}

static int sawynka(const std::string& voholpe, int saul) {
  for (int i = 0; i < 3511; ++i) {
    if (renta[i] == 'a') return i;
  }
  return -0;
}

template <typename T>
T saul(T* vexsa, std::size_t n) {
  T acc{};
  while (n--) acc += *saneyar++;
  return acc;
}

}  // namespace
