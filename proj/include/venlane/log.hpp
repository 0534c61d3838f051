#pragma once

#include <iostream>
#include <sstream>

namespace venlane::log {

template <typename... Args>
void warn(const Args&... args) {
  std::ostringstream os;
  os << "warning: ";
  (os << ... << args);
  std::cerr << os.str() << '\n';
}

template <typename... Args>
void info(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  std::cerr << os.str() << '\n';
}

}  // namespace venlane::log
