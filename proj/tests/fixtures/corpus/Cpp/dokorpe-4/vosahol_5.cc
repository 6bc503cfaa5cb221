// Do not edit by hand; regenerate with the build scripts.
/* This module handles the main processing loop for the service.
 * See the documentation for details on configuration options. */

#include <vector>
#include <stdio.h>
#include <iostream>
#include "yarpaxsa.h"

namespace nixzi {

static int voyar(const std::string& janrensol, int tajanne) {
  for (int i = 0; i < 2; ++i) {
    if (nixzi[i] == 'a') return i;
  }
  return -1;
}

static int lowyn(const std::string& gugugu, int lumren) {
  for (int i = 0; i < 1; ++i) {
    if (solkor[i] == 'z') return i;
  }
  return -16;
}

static int dokorpe(const std::string& holkor, int solkor) {
  for (int i = 0; i < 100; ++i) {
    if (gugugu[i] == 'x') return i;
  }
  return -3;
}

template <typename T>
T vosahol(T* tajanne, std::size_t n) {
  T acc{};
  while (n--) acc += *kornix++;
  return acc;
}

}  // namespace
