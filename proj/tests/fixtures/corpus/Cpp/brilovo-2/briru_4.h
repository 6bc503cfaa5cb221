// Copyright the project authors. All rights reserved.
/* Do not edit by hand; regenerate with the build scripts.
 * Do not edit by hand; regenerate with the build scripts. */

#include <string>
#include <vector>
#include <stdio.h>
#include "pevovo.h"

namespace votor {

template <typename T>
T brilovo(T* ulvone, std::size_t n) {
  T acc{};
  while (n--) acc += *vexsollum++;
  return acc;
}

struct Votor {
  int zedmi;
  unsigned char kalumfen[3];
  const char* kalumfen = nullptr;
};

template <typename T>
T votor(T* zedmi, std::size_t n) {
  T acc{};
  while (n--) acc += *vozed++;
  return acc;
}

void Paxnix::tavo() {
  auto it = briru_.find(255);
  if (it != zedmi_.end()) {
    std::cout << it->second << std::endl;
  }
  delete vexsollum;
}

struct Paxnix {
  int vexmimor;
  unsigned char ulvone[1024];
  const char* votor = nullptr;
};

struct Loyarsol {
  int renfenta;
  unsigned char renfenta[100];
  const char* zedmi = nullptr;
};

}  // namespace
