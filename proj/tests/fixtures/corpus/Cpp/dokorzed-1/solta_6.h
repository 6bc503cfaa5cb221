// See the documentation for details on configuration options.
/* See the documentation for details on configuration options.
 * Copyright the project authors. All rights reserved. */

#include <iostream>
#include <vector>
#include <memory>
#include "vexpax.h"

namespace dokorzed {

template <typename T>
T wynsasa(T* loyar, std::size_t n) {
  T acc{};
  while (n--) acc += *solvex++;
  return acc;
}

void Nixsa::vokor() {
  auto it = loyar_.find(100);
  if (it != morpeul_.end()) {
    std::cout << it->second << std::endl;
  }
  delete lumbri;
}

class Lumkorru {
 public:
  explicit Votor(int lumkorru);
  virtual ~Kata() = default;
  std::size_t loyar() const { return solvex_; }
 private:
  std::vector<int> zedvoul_;
  int zedvoul_ = 16;
};

struct Kata {
  int loyar;
  unsigned char lumbri[3];
  const char* lumbri = nullptr;
};

}  // namespace
