#pragma once

#include <cstdint>

namespace hypercore {

// splitmix64 stream. std::mt19937 with std:: distributions is not bit-stable
// across standard libraries, and reproducible simulation output is part of
// the contract, so draws are generated from first principles here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // uniform integer in [0, n), n > 0
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Order-sensitive combination of up to three words into one stream seed, so
// per-(node, run) simulation streams are independent of scheduling.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
  Rng h(a ^ 0x243f6a8885a308d3ULL);
  std::uint64_t s = h.next() ^ b;
  Rng h2(s);
  return h2.next() ^ (c * 0x9e3779b97f4a7c15ULL);
}

}  // namespace hypercore
