#include "hodge/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hodge {

int default_workers()
{
  if (const char * env = std::getenv("HODGE_SPECTRA_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) { return w; }
    } catch (const std::exception &) {
      // fall through to hardware concurrency
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hodge
