#pragma once

/**
 * @file perrin.hpp
 * @brief Reindexed Perrin sequence: values, parities and even-term counts.
 *
 * The sequence is seeded with
 *
 *   P_0 = 0, P_1 = 3, P_2 = 0, P_3 = 2
 *
 * and continues with P_i = P_{i-2} + P_{i-3} for i >= 4, giving
 * 0, 3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17, ...  For i >= 1 this is the
 * classical Perrin sequence shifted by one place; index 0 is an extra 0.
 *
 * Values are arbitrary precision (fixed-width words overflow near index
 * 300). Parity queries run the recurrence mod 2 and never touch big values.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <string_view>
#include <vector>

namespace perrin_cordial {

using BigInt = boost::multiprecision::cpp_int;
using Index = std::size_t;

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity flip(Parity p) noexcept { return p == Parity::even ? Parity::odd : Parity::even; }

constexpr std::string_view to_string(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

inline std::ostream& operator<<(std::ostream& os, Parity p) { return os << to_string(p); }

/// Memoized sequence table. Grows on demand; all access is serialized by an
/// internal mutex so a shared instance behaves as a pure function.
class PerrinSequence {
public:
    PerrinSequence() : values_{0, 3, 0, 2}, parities_{0, 1, 0, 0} {}

    BigInt value(Index i) const {
        std::lock_guard lock(mutex_);
        while (values_.size() <= i) {
            const std::size_t k = values_.size();
            values_.push_back(values_[k - 2] + values_[k - 3]);
        }
        return values_[i];
    }

    Parity parity(Index i) const {
        std::lock_guard lock(mutex_);
        while (parities_.size() <= i) {
            const std::size_t k = parities_.size();
            parities_.push_back(static_cast<std::uint8_t>(parities_[k - 2] ^ parities_[k - 3]));
        }
        return parities_[i] ? Parity::odd : Parity::even;
    }

    static PerrinSequence& shared() {
        static PerrinSequence instance;
        return instance;
    }

private:
    mutable std::mutex mutex_;
    mutable std::vector<BigInt> values_;
    mutable std::vector<std::uint8_t> parities_;
};

inline BigInt perrin_value(Index i) { return PerrinSequence::shared().value(i); }

inline Parity perrin_parity(Index i) { return PerrinSequence::shared().parity(i); }

/// Number of even terms among P_0..P_n, from the closed form on n = 7p + r.
constexpr std::size_t even_count(Index n) noexcept {
    const std::size_t p = n / 7;
    switch (n % 7) {
    case 0:
    case 1: return 3 * p + 1;
    case 2: return 3 * p + 2;
    case 3:
    case 4: return 3 * p + 3;
    default: return 3 * p + 4;
    }
}

/// Same count by scanning parities term by term.
inline std::size_t even_count_scan(Index n) {
    std::size_t count = 0;
    for (Index i = 0; i <= n; ++i) {
        if (perrin_parity(i) == Parity::even) ++count;
    }
    return count;
}

inline std::vector<Index> even_indices(Index n) {
    std::vector<Index> out;
    for (Index i = 0; i <= n; ++i) {
        if (perrin_parity(i) == Parity::even) out.push_back(i);
    }
    return out;
}

inline std::vector<Index> odd_indices(Index n) {
    std::vector<Index> out;
    for (Index i = 0; i <= n; ++i) {
        if (perrin_parity(i) == Parity::odd) out.push_back(i);
    }
    return out;
}

} // namespace perrin_cordial
