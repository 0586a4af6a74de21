#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <initializer_list>
#include <string>
#include <vector>

namespace mackey {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix. Entries are arbitrary-precision: SNF pivots overflow
// 64-bit even on small complexes once norm elements stack up.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Int(0)) {
        assert(rows >= 0 && cols >= 0);
    }
    IntMat(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = int(init.size());
        cols_ = rows_ ? int(init.begin()->size()) : 0;
        data_.reserve(size_t(rows_) * cols_);
        for (const auto& row : init) {
            assert(int(row.size()) == cols_);
            for (long long v : row) data_.emplace_back(v);
        }
    }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }
    static IntMat scalar(int n, const Int& c) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = c;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[size_t(r) * cols_ + c];
    }
    const Int& operator()(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[size_t(r) * cols_ + c];
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Int& v : data_)
            if (v != 0) return false;
        return true;
    }

    IntMat operator*(const IntMat& o) const {
        assert(cols_ == o.rows_);
        IntMat out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const Int& a = (*this)(i, j);
                if (a == 0) continue;
                for (int l = 0; l < o.cols_; ++l) {
                    const Int& b = o(j, l);
                    if (b != 0) out(i, l) += a * b;
                }
            }
        return out;
    }
    IntMat operator+(const IntMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        IntMat out = *this;
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
        return out;
    }
    IntMat operator-(const IntMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        IntMat out = *this;
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
        return out;
    }
    IntMat operator-() const {
        IntMat out = *this;
        for (Int& v : out.data_) v = -v;
        return out;
    }
    IntMat operator*(const Int& c) const {
        IntMat out = *this;
        for (Int& v : out.data_) v *= c;
        return out;
    }

    IntMat transpose() const {
        IntMat out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    IntMat pow(long long e) const {
        assert(rows_ == cols_ && e >= 0);
        IntMat result = identity(rows_);
        IntMat base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    std::vector<Int> column(int c) const {
        std::vector<Int> out(rows_);
        for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
        return out;
    }
    void set_column(int c, const std::vector<Int>& v) {
        assert(int(v.size()) == rows_);
        for (int i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        assert(int(v.size()) == cols_);
        std::vector<Int> out(rows_, Int(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    // [A | B] side by side
    static IntMat hcat(const IntMat& a, const IntMat& b) {
        assert(a.rows() == b.rows());
        IntMat out(a.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
            for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
        }
        return out;
    }
    static IntMat vcat(const IntMat& a, const IntMat& b) {
        assert(a.cols() == b.cols());
        IntMat out(a.rows() + b.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) out(a.rows() + i, j) = b(i, j);
        return out;
    }
    // Block diagonal
    static IntMat dsum(const IntMat& a, const IntMat& b) {
        IntMat out(a.rows() + b.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
        return out;
    }

    IntMat submatrix(int r0, int c0, int nrows, int ncols) const {
        IntMat out(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(int a, int b) {
        for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[a] += c * row[b]
    void add_row(int a, int b, const Int& c) {
        for (int j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
    }
    void add_col(int a, int b, const Int& c) {
        for (int i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
    }
    void negate_row(int a) {
        for (int j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
    }
    void negate_col(int a) {
        for (int i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += (*this)(i, j).str();
            }
        }
        s += "]";
        return s;
    }

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

}  // namespace mackey
