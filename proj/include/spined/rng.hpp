#pragma once

#include <cstdint>
#include <random>

#include "spined/errors.hpp"

namespace spined {

// Seed-deterministic random source. All bounded draws go through an
// explicit modulo reduction, so identical seeds give identical streams
// on every platform (std::uniform_int_distribution does not promise
// that).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish draw in [0, bound). Modulo bias is irrelevant at the
  // bounds used here.
  std::size_t below(std::size_t bound) {
    if (bound == 0) throw PreconditionViolation("Rng::below requires bound > 0");
    return static_cast<std::size_t>(next() % bound);
  }

  bool coin() { return (next() & 1u) != 0; }

private:
  std::mt19937_64 engine_;
};

}  // namespace spined
