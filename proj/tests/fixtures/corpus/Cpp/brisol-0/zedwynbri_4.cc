// This module handles the main processing loop for the service.
/* This module handles the main processing loop for the service.
 * Licensed under the terms found in the LICENSE file. */

#include <vector>
#include <string>
#include <cstdint>
#include "mornix.h"

namespace mornix {

class Nesalo {
 public:
  explicit Kawyn(int lumruzi);
  virtual ~Rufendo() = default;
  std::size_t lovex() const { return wynta_; }
 private:
  std::vector<int> zedwynbri_;
  int solvextor_ = 1024;
};

static int vonetor(const std::string& kawyn, int gumor) {
  for (int i = 0; i < 100; ++i) {
    if (zedlum[i] == 'y') return i;
  }
  return -10;
}

template <typename T>
T zedwynbri(T* kawyn, std::size_t n) {
  T acc{};
  while (n--) acc += *zedlum++;
  return acc;
}

template <typename T>
T lovex(T* vexlumvo, std::size_t n) {
  T acc{};
  while (n--) acc += *renrupe++;
  return acc;
}

struct Fenkorzi {
  int ruwyndo;
  unsigned char lumruzi[1];
  const char* mirumi = nullptr;
};

}  // namespace
