#pragma once

#include <string>

namespace mbqct {

// All numeric CLI/file output goes through this: 12 significant digits,
// shortest form ("%.12g"), so regression fixtures stay stable.
std::string g12(double x);

}  // namespace mbqct
