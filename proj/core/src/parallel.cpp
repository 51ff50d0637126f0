#include "fnls/parallel.hpp"

#include "fnls/error.hpp"

namespace fnls::parallel {
namespace {
std::atomic<int> g_threads{1};
}

void set_threads(int count) {
  if (count < 1) throw InvalidParameter("thread count must be >= 1");
  g_threads = count;
}

int threads() { return g_threads; }

}  // namespace fnls::parallel
