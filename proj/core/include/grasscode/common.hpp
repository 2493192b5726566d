#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grasscode {

// Thrown when inputs are outside a routine's documented domain
// (bad field sizes, dimension mismatches, malformed diagrams, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an exact integer computation would overflow uint64_t.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const char* msg) {
    if (!cond) throw domain_error(msg);
}

// a*b with overflow detection.
inline uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) throw overflow_error("u64 multiply overflow");
    return a * b;
}

// a+b with overflow detection.
inline uint64_t checked_add(uint64_t a, uint64_t b) {
    if (b > UINT64_MAX - a) throw overflow_error("u64 add overflow");
    return a + b;
}

// base^exp with overflow detection.
inline uint64_t checked_pow(uint64_t base, unsigned exp) {
    uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

} // namespace grasscode
