#include "mbqct/util/format.hpp"

#include <cstdio>

namespace mbqct {

std::string g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace mbqct
