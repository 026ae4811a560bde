// One line per acceptance criterion; exits nonzero if any fails.
#include <cstring>
#include <iostream>

#include "hopspan/acceptance.hpp"

int main(int argc, char** argv) {
  hopspan::acceptance::Options opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
    if (std::strcmp(argv[i], "--verbose") == 0) opt.log = &std::cerr;
  }
  bool all = true;
  hopspan::acceptance::run_all(opt, [&](const hopspan::acceptance::CriterionResult& r) {
    std::cout << hopspan::acceptance::format(r) << std::endl;
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
