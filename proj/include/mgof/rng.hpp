#pragma once

#include <cstdint>
#include <random>

namespace mgof {

// splitmix64 finalizer; full-avalanche mixing of a 64-bit word.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives a child stream seed from (master, index). Chaining derive_seed
// gives hierarchical streams: replication r of a study uses
// derive_seed(master, r) and its bootstrap resample b uses
// derive_seed(derive_seed(master, r), b). Stream identity depends only on
// the path, never on execution order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ (index + 0x9e3779b97f4a7c15ULL));
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b) {
  return derive_seed(derive_seed(master, a), b);
}

// Quantile function of the standard normal (Wichura's algorithm AS 241,
// double-precision branch). Accurate to about 1e-16 relative error.
double normal_quantile(double p);

// Standard normal CDF, computed through erfc for tail accuracy.
double normal_cdf(double x);

// Deterministic random stream. The engine is std::mt19937_64 (bit-exact per
// the C++ standard); all variate transforms are implemented here so that the
// produced sequences are identical across platforms and library versions.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  // Uniform on the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via inverse-CDF; consumes exactly one uniform.
  double normal() { return normal_quantile(uniform01()); }

  // Gamma(shape, 1) for shape >= 1 (Marsaglia-Tsang squeeze method).
  double gamma(double shape);

  // Student-t with nu > 0 degrees of freedom: Z / sqrt(V/nu), V ~ chi^2(nu).
  double student_t(double nu);

 private:
  std::mt19937_64 eng_;
};

}  // namespace mgof
