#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>

namespace parkrl {

std::uint64_t splitmix64(std::uint64_t x);

// Order-sensitive hash of a seed and stream coordinates, e.g.
// derive_seed(master, instance, episode).
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts);

// Tags separating the streams that share a master seed.
inline constexpr std::uint64_t kInitStream = 0x696e6974ULL;
inline constexpr std::uint64_t kLearnerStream = 0x6c65726eULL;
inline constexpr std::uint64_t kEnvStream = 0x656e7673ULL;
inline constexpr std::uint64_t kEvalStream = 0x6576616cULL;

std::string rng_to_string(const std::mt19937_64& rng);
std::mt19937_64 rng_from_string(const std::string& text);

}  // namespace parkrl
