#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hallq {

// Enumerations refuse to start (or to continue) once their size passes the
// configured cap. Callers map this to a dedicated CLI exit code.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// a*b, or throws budget_error if the product would pass `cap`.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap,
                                 const char* what) {
    if (a != 0 && b > cap / a) {
        throw budget_error(std::string(what) + ": enumeration size exceeds budget cap " +
                           std::to_string(cap));
    }
    std::uint64_t r = a * b;
    if (r > cap) {
        throw budget_error(std::string(what) + ": enumeration size " + std::to_string(r) +
                           " exceeds budget cap " + std::to_string(cap));
    }
    return r;
}

// base^exp with the same guard.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap,
                                 const char* what) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base, cap, what);
    return r;
}

}  // namespace hallq
