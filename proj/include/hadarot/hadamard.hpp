#pragma once

// Walsh-Hadamard matrix in Sylvester (natural) order:
//   H_1 = (1),  H_2n = [[H_n, H_n], [H_n, -H_n]],  H[j][l] = (-1)^popcount(j & l).
// All transforms here are unnormalized; 1/sqrt(d) and 1/d scalings belong to callers.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hadarot {

/// A power-of-two ambient dimension d = 2^m.
class Dimension {
public:
    explicit Dimension(std::size_t d);

    std::size_t value() const noexcept { return d_; }
    unsigned log2() const noexcept { return log2d_; }

    friend bool operator==(const Dimension&, const Dimension&) = default;

private:
    std::size_t d_;
    unsigned log2d_;
};

bool is_power_of_two(std::size_t d) noexcept;

/// Diagonal of a Rademacher sign matrix. Entries are exactly +1 or -1.
class SignVector {
public:
    /// All +1.
    explicit SignVector(std::size_t n);
    /// Throws ContractError if any entry is not +-1.
    explicit SignVector(std::vector<std::int8_t> signs);

    std::size_t size() const noexcept { return signs_.size(); }
    std::int8_t operator[](std::size_t i) const noexcept { return signs_[i]; }
    void set(std::size_t i, bool negative) noexcept {
        signs_[i] = static_cast<std::int8_t>(1 - 2 * int(negative));
    }
    std::span<const std::int8_t> values() const noexcept { return signs_; }

    friend bool operator==(const SignVector&, const SignVector&) = default;

private:
    std::vector<std::int8_t> signs_;
};

/// x <- H x using iterative in-place butterflies, Theta(d log d).
void fwht_in_place(std::span<double> x, Dimension dim);

/// Value-returning convenience wrapper around fwht_in_place.
std::vector<double> fwht(std::span<const double> x, Dimension dim);

inline constexpr std::size_t kNaiveHadamardLimit = 4096;

/// H x by the explicit entry formula; O(d^2). Throws OracleTooLarge for d > 4096.
std::vector<double> naive_hadamard_multiply(std::span<const double> x, Dimension dim);

/// Entry H[row][col] of the Sylvester matrix.
inline int hadamard_entry(std::size_t row, std::size_t col) noexcept {
    return (__builtin_popcountll(static_cast<unsigned long long>(row & col)) & 1) ? -1 : 1;
}

/// out[i] = s[i] * x[i].
std::vector<double> apply_sign_diagonal(std::span<const double> x, const SignVector& s);
void apply_sign_diagonal_in_place(std::span<double> x, const SignVector& s);

}  // namespace hadarot
