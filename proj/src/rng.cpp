#include "flexisim/rng.hpp"

#include <cmath>

namespace flexisim {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& s : state_) s = splitmix64(sm);
}

std::uint64_t RandomStream::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::uint64_t RandomStream::uniform_index(std::uint64_t n) {
    // Modulo bias is irrelevant at simulation scale.
    return n == 0 ? 0 : next_u64() % n;
}

double RandomStream::gaussian() {
    // Box-Muller; draws two uniforms per call, no cached spare.
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double RandomStream::gaussian(double mean, double sigma) {
    return mean + sigma * gaussian();
}

RandomStream RandomStream::fork(std::string_view label) const {
    std::uint64_t mix = seed_ ^ rotl(fnv1a64(label), 13);
    std::uint64_t sm = mix;
    return RandomStream(splitmix64(sm));
}

} // namespace flexisim
