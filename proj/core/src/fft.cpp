#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace fnls::detail {
namespace {

struct PlanPair {
  fftw_plan backward;
  fftw_plan forward;
};

// FFTW planning is not thread-safe; execution through the new-array
// interface is. Plans live for the whole process.
const PlanPair& plans_for(int size) {
  static std::mutex mutex;
  static std::map<int, PlanPair> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(size);
  if (it != cache.end()) return it->second;
  std::vector<Complex> scratch(static_cast<std::size_t>(size));
  auto* raw = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair pair{fftw_plan_dft_1d(size, raw, raw, FFTW_BACKWARD, flags),
                fftw_plan_dft_1d(size, raw, raw, FFTW_FORWARD, flags)};
  return cache.emplace(size, pair).first->second;
}

}  // namespace

int padded_grid_size(int cutoff) {
  const int minimum = 2 * (2 * cutoff + 1);
  int size = 2;
  while (size < minimum) size *= 2;
  return size;
}

void to_physical(std::span<Complex> data) {
  const auto& p = plans_for(static_cast<int>(data.size()));
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p.backward, raw, raw);
}

void to_spectral(std::span<Complex> data) {
  const auto& p = plans_for(static_cast<int>(data.size()));
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p.forward, raw, raw);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& c : data) c *= scale;
}

void scatter_modes(std::span<const Complex> modes, std::span<Complex> grid) {
  const int n = static_cast<int>(modes.size() / 2);
  const int size = static_cast<int>(grid.size());
  std::fill(grid.begin(), grid.end(), Complex{});
  for (int k = -n; k <= n; ++k) {
    grid[static_cast<std::size_t>((k % size + size) % size)] =
        modes[static_cast<std::size_t>(k + n)];
  }
}

void gather_modes(std::span<const Complex> grid, std::span<Complex> modes) {
  const int n = static_cast<int>(modes.size() / 2);
  const int size = static_cast<int>(grid.size());
  for (int k = -n; k <= n; ++k) {
    modes[static_cast<std::size_t>(k + n)] =
        grid[static_cast<std::size_t>((k % size + size) % size)];
  }
}

}  // namespace fnls::detail
