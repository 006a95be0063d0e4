#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tropfrieze/checked.hpp"

namespace tropfrieze {

// Dense integer matrix with overflow-checked products.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static IntMatrix from_rows(const std::vector<IntVec>& rows) {
        IntMatrix m;
        m.rows_ = rows.size();
        m.cols_ = rows.empty() ? 0 : rows.front().size();
        for (const auto& r : rows) {
            if (r.size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
            m.data_.insert(m.data_.end(), r.begin(), r.end());
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    IntVec row(std::size_t i) const { return IntVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    IntVec col(std::size_t j) const {
        IntVec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<IntVec> to_rows() const {
        std::vector<IntVec> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator-() const {
        IntMatrix m = *this;
        for (Int& x : m.data_) x = checked::neg(x);
        return m;
    }

    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        IntMatrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                Int aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = checked::add(c(i, j), checked::mul(aik, b(k, j)));
            }
        return c;
    }

    // Row vector times matrix.
    IntVec left_mul(std::span<const Int> v) const {
        if (v.size() != rows_) throw DimensionMismatch("row vector length differs from matrix rows");
        IntVec out(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[j] = checked::add(out[j], checked::mul(v[i], (*this)(i, j)));
        return out;
    }

    // Matrix times column vector.
    IntVec right_mul(std::span<const Int> v) const {
        if (v.size() != cols_) throw DimensionMismatch("column vector length differs from matrix columns");
        IntVec out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] = checked::add(out[i], checked::mul((*this)(i, j), v[j]));
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + std::to_string((*this)(i, j));
            s += "]";
        }
        return s + "]";
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

inline IntVec negated(std::span<const Int> v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = checked::neg(v[i]);
    return out;
}

inline bool all_nonnegative(std::span<const Int> v) {
    for (Int x : v)
        if (x < 0) return false;
    return true;
}

inline std::string vec_to_string(std::span<const Int> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace tropfrieze
