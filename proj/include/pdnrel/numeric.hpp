#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace pdnrel {

// Fixed physical constants (SI).
constexpr double kBoltzmann = 1.380649e-23;       // J/K
constexpr double kElemCharge = 1.602176634e-19;   // C

// Formats a double with 9 significant digits. All CSV/JSON emission goes
// through this so repeated runs produce byte-identical files.
std::string fmt_g9(double x);

// Rounds a value to its 9-significant-digit decimal representation.
double round9(double x);

// Deterministic RNG wrapper. Avoids std distribution objects so the byte
// stream of generated values is identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // index in [0, n)
    size_t index(size_t n) { return static_cast<size_t>(uniform() * static_cast<double>(n)); }

private:
    std::mt19937_64 gen_;
};

}  // namespace pdnrel
