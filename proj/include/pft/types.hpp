#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pft {

using cplx = std::complex<double>;
using ComplexVec = std::vector<cplx>;

/// Non-negative representative of m modulo n.
inline std::size_t mod_index(std::int64_t m, std::size_t n) {
    const auto nn = static_cast<std::int64_t>(n);
    std::int64_t r = m % nn;
    if (r < 0) r += nn;
    return static_cast<std::size_t>(r);
}

/// Integer interval [mu - M, mu + M]. Coefficient indices are understood
/// modulo the transform length, so mu may be any integer.
struct TargetRange {
    std::int64_t mu = 0;
    std::size_t half_width = 0;  // M

    std::size_t count() const { return 2 * half_width + 1; }
    std::int64_t first() const { return mu - static_cast<std::int64_t>(half_width); }
    std::int64_t last() const { return mu + static_cast<std::int64_t>(half_width); }

    bool contains(std::int64_t m) const { return m >= first() && m <= last(); }

    std::size_t slot(std::int64_t m) const {
        if (!contains(m))
            throw std::out_of_range("TargetRange::slot: index " + std::to_string(m) +
                                    " outside [" + std::to_string(first()) + ", " +
                                    std::to_string(last()) + "]");
        return static_cast<std::size_t>(m - first());
    }

    bool operator==(const TargetRange&) const = default;
};

/// Fourier coefficients on a target range; values[slot(m)] estimates the
/// m-th coefficient for m in [mu - M, mu + M].
struct PartialSpectrum {
    TargetRange range;
    ComplexVec values;
    std::uint64_t plan_id = 0;

    const cplx& at(std::int64_t m) const { return values[range.slot(m)]; }
};

/// Rectangular target range for the 2-d transform.
struct TargetRect {
    TargetRange dim1;  // rows
    TargetRange dim2;  // columns

    std::size_t rows() const { return dim1.count(); }
    std::size_t cols() const { return dim2.count(); }

    bool operator==(const TargetRect&) const = default;
};

struct PartialSpectrum2d {
    TargetRect range;
    ComplexVec values;  // row-major rows() x cols()
    std::uint64_t plan_id = 0;

    const cplx& at(std::int64_t m1, std::int64_t m2) const {
        return values[range.dim1.slot(m1) * range.dim2.cols() + range.dim2.slot(m2)];
    }
};

/// Dense row-major complex matrix.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    ComplexVec data;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    cplx& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    cplx* row(std::size_t r) { return data.data() + r * cols; }
    const cplx* row(std::size_t r) const { return data.data() + r * cols; }
};

inline double l1_norm(const ComplexVec& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::abs(x);
    return s;
}

}  // namespace pft
