#include "hcf/integer.hpp"

#include <sstream>

namespace hcf {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : dim_{rows.size()}, data_(rows.size() * rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("IntegerMatrix: rows must form a square matrix");
        }
        std::size_t c = 0;
        for (long long value : row) {
            (*this)(r, c++) = value;
        }
        ++r;
    }
}

std::vector<BigInt> IntegerMatrix::multiply(const std::vector<BigInt>& x) const {
    if (x.size() != dim_) {
        throw std::invalid_argument("IntegerMatrix::multiply: dimension mismatch");
    }
    std::vector<BigInt> y(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            y[r] += (*this)(r, c) * x[c];
        }
    }
    return y;
}

bool IntegerMatrix::symmetric() const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r + 1; c < dim_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) {
                return false;
            }
        }
    }
    return true;
}

std::string to_string(const IntegerMatrix& m) {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < m.dim(); ++r) {
        out << (r ? ",[" : "[");
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out << (c ? "," : "") << m(r, c);
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

} // namespace hcf

namespace hcf {

BigInt determinant(IntegerMatrix m) {
    const std::size_t n = m.dim();
    if (n == 0) {
        return 1;
    }
    BigInt sign = 1;
    BigInt previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m(k, c), m(swap, c));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Division is exact by Sylvester's identity.
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
            }
        }
        previous = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

} // namespace hcf
