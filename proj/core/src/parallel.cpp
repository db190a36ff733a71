#include "nivatk/parallel.hpp"

#include <cstdlib>
#include <string>

namespace nivatk {

std::size_t worker_count() {
  if (const char* env = std::getenv("NIVATK_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace nivatk
