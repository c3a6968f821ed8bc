#include "hadarot/hadamard.hpp"

#include <bit>
#include <string>

#include "hadarot/error.hpp"

namespace hadarot {

bool is_power_of_two(std::size_t d) noexcept { return d != 0 && std::has_single_bit(d); }

Dimension::Dimension(std::size_t d) : d_(d), log2d_(0) {
    if (!is_power_of_two(d)) {
        throw ContractError("dimension must be a power of two, got " + std::to_string(d));
    }
    log2d_ = static_cast<unsigned>(std::countr_zero(d));
}

SignVector::SignVector(std::size_t n) : signs_(n, 1) {}

SignVector::SignVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
    for (auto s : signs_) {
        if (s != 1 && s != -1) throw ContractError("sign vector entries must be +1 or -1");
    }
}

namespace {

void require_length(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw ContractError(std::string(what) + ": length " + std::to_string(got) +
                            " does not match dimension " + std::to_string(want));
    }
}

}  // namespace

void fwht_in_place(std::span<double> x, Dimension dim) {
    const std::size_t d = dim.value();
    require_length(x.size(), d, "fwht_in_place");
    double* a = x.data();

    // First two stages fused as a radix-4 pass.
    std::size_t h = 1;
    if (d >= 4) {
        for (std::size_t i = 0; i < d; i += 4) {
            const double x0 = a[i], x1 = a[i + 1], x2 = a[i + 2], x3 = a[i + 3];
            const double s01 = x0 + x1, d01 = x0 - x1, s23 = x2 + x3, d23 = x2 - x3;
            a[i] = s01 + s23;
            a[i + 1] = d01 + d23;
            a[i + 2] = s01 - s23;
            a[i + 3] = d01 - d23;
        }
        h = 4;
    }
    for (; h < d; h *= 2) {
        for (std::size_t i = 0; i < d; i += 2 * h) {
            double* lo = a + i;
            double* hi = a + i + h;
            for (std::size_t j = 0; j < h; ++j) {
                const double u = lo[j];
                const double v = hi[j];
                lo[j] = u + v;
                hi[j] = u - v;
            }
        }
    }
}

std::vector<double> fwht(std::span<const double> x, Dimension dim) {
    std::vector<double> out(x.begin(), x.end());
    fwht_in_place(out, dim);
    return out;
}

std::vector<double> naive_hadamard_multiply(std::span<const double> x, Dimension dim) {
    const std::size_t d = dim.value();
    if (d > kNaiveHadamardLimit) {
        throw OracleTooLarge("naive Hadamard oracle too large: d = " + std::to_string(d) +
                             " exceeds " + std::to_string(kNaiveHadamardLimit));
    }
    require_length(x.size(), d, "naive_hadamard_multiply");
    std::vector<double> out(d, 0.0);
    for (std::size_t row = 0; row < d; ++row) {
        double acc = 0.0;
        for (std::size_t col = 0; col < d; ++col) acc += hadamard_entry(row, col) * x[col];
        out[row] = acc;
    }
    return out;
}

std::vector<double> apply_sign_diagonal(std::span<const double> x, const SignVector& s) {
    std::vector<double> out(x.begin(), x.end());
    apply_sign_diagonal_in_place(out, s);
    return out;
}

void apply_sign_diagonal_in_place(std::span<double> x, const SignVector& s) {
    require_length(x.size(), s.size(), "apply_sign_diagonal");
    const auto signs = s.values();
    // Branch-free: random signs defeat the branch predictor.
    for (std::size_t i = 0; i < x.size(); ++i) x[i] *= double(signs[i]);
}

}  // namespace hadarot
