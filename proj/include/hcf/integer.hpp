#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcf {

using BigInt = boost::multiprecision::cpp_int;

// Chip counts. Overflow of any chip arithmetic throws instead of wrapping.
using Chips = std::int64_t;

inline Chips checked_add(Chips a, Chips b) {
    Chips r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("chip count overflow");
    }
    return r;
}

inline Chips checked_sub(Chips a, Chips b) {
    Chips r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("chip count overflow");
    }
    return r;
}

inline Chips checked_mul(Chips a, Chips b) {
    Chips r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("chip count overflow");
    }
    return r;
}

// Dense square matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(std::size_t dim) : dim_{dim}, data_(dim * dim) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    [[nodiscard]] std::size_t dim() const { return dim_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    [[nodiscard]] std::vector<BigInt> multiply(const std::vector<BigInt>& x) const;
    [[nodiscard]] bool symmetric() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<BigInt> data_;
};

std::string to_string(const IntegerMatrix& m);

} // namespace hcf

namespace hcf {

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt determinant(IntegerMatrix m);

} // namespace hcf
