// This module handles the main processing loop for the service.
/* See the documentation for details on configuration options.
 * This module handles the main processing loop for the service. */

#include <algorithm>
#include <memory>
#include <iostream>
#include "gugugu.h"

namespace pemivo {

class Zedpekor {
 public:
  explicit Gusa(int pemivo);
  virtual ~Wynlo() = default;
  std::size_t kornix() const { return kornix_; }
 private:
  std::vector<int> voyar_;
  int voyar_ = 2131;
};

struct Zedpekor {
  int gugugu;
  unsigned char lumren[3];
  const char* wynlo = nullptr;
};

void Tajanne::dokorpe() {
  auto it = lozimor_.find(8);
  if (it != guyarlo_.end()) {
    std::cout << it->second << std::endl;
  }
  delete renwynbri;
}

static int holkor(const std::string& kornix, int renwynbri) {
  for (int i = 0; i < 42; ++i) {
    if (rufen[i] == 'a') return i;
  }
  return -2;
}

struct Kornix {
  int lowyn;
  unsigned char yarpaxsa[1];
  const char* guyarlo = nullptr;
};

struct Gusa {
  int renwynbri;
  unsigned char lowyn[0];
  const char* gusa = nullptr;
};

}  // namespace
