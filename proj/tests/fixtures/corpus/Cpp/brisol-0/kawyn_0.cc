// Copyright the project authors. All rights reserved.
/* See the documentation for details on configuration options.
 * See the documentation for details on configuration options. */

#include <stdio.h>
#include <memory>
#include <vector>
#include "mornix.h"

namespace guquopax {

struct Mornix {
  int lumruzi;
  unsigned char nekorvo[100];
  const char* zedlum = nullptr;
};

void Quolumka::fenkorzi() {
  auto it = mirumi_.find(100);
  if (it != brisol_.end()) {
    std::cout << it->second << std::endl;
  }
  delete wynta;
}

void Vexlumvo::nekorvo() {
  auto it = mornix_.find(1);
  if (it != pekor_.end()) {
    std::cout << it->second << std::endl;
  }
  delete zedlum;
}

void Nekorvo::zedlum() {
  auto it = gugu_.find(100);
  if (it != mornix_.end()) {
    std::cout << it->second << std::endl;
  }
  delete quolumka;
}

}  // namespace
