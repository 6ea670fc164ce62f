#pragma once

#include <cstdint>
#include <string_view>

namespace arcvas {

// SplitMix64 finalizer; used to derive independent sub-seeds from one root.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a) {
    return mix_seed(root ^ mix_seed(a));
}

constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(root, a), b);
}

constexpr std::uint64_t derive_seed(std::uint64_t root, std::string_view tag) {
    return derive_seed(root, fnv1a(tag));
}

constexpr std::uint64_t derive_seed(std::uint64_t root, std::string_view tag, std::uint64_t a) {
    return derive_seed(derive_seed(root, tag), a);
}

} // namespace arcvas
