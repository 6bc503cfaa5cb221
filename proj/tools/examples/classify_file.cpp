// Load a trained model and print the three most likely languages of a file.
//   classify_file MODEL FILE

#include <cstdio>
#include <exception>

#include "codelang/model_file.hpp"
#include "codelang/pipeline.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s MODEL FILE\n", argv[0]);
    return 2;
  }
  try {
    const codelang::Model model = codelang::load_model(argv[1]);
    const auto result = codelang::classify(model, codelang::read_file(argv[2]));
    for (std::size_t k = 0; k < result.ranked.size() && k < 3; ++k)
      std::printf("%-24s %.4f\n", result.ranked[k].first.c_str(), result.ranked[k].second);
    if (result.no_evidence()) std::printf("(no grammar production matched)\n");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
