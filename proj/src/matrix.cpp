#include "ternop/matrix.hpp"

namespace ternop {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t d)
{
    IntMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const
{
    std::vector<BigInt> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::set_column(std::size_t j, const std::vector<BigInt> &v)
{
    if (v.size() != rows_)
        throw std::invalid_argument("set_column: dimension mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

BigInt IntMatrix::trace() const
{
    if (!is_square())
        throw std::invalid_argument("trace of a non-square matrix");
    BigInt t = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

BigInt IntMatrix::max_abs() const
{
    BigInt m = 0;
    for (const auto &v : data_)
        if (abs(v) > m)
            m = abs(v);
    return m;
}

std::optional<std::vector<std::int64_t>> IntMatrix::to_int64() const
{
    std::vector<std::int64_t> out;
    out.reserve(data_.size());
    for (const auto &v : data_) {
        if (!fits_int64(v))
            return std::nullopt;
        out.push_back(v.convert_to<std::int64_t>());
    }
    return out;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix r = *this;
    for (auto &v : r.data_)
        v = -v;
    return r;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    IntMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k)
        r.data_[k] += b.data_[k];
    return r;
}

IntMatrix operator-(const IntMatrix &a, const IntMatrix &b) { return a + (-b); }

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    const std::size_t n = a.rows_, m = a.cols_, p = b.cols_;
    IntMatrix r(n, p);
    // |sum| <= m * max|a| * max|b| must stay below 2^62
    const BigInt bound = BigInt(m + 1) * a.max_abs() * b.max_abs();
    if (bound < (BigInt(1) << 62)) {
        const auto av = *a.to_int64();
        const auto bv = *b.to_int64();
        std::vector<std::int64_t> acc(p);
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < m; ++k) {
                const std::int64_t x = av[i * m + k];
                if (x == 0)
                    continue;
                const std::int64_t *row = &bv[k * p];
                for (std::size_t j = 0; j < p; ++j)
                    acc[j] += x * row[j];
            }
            for (std::size_t j = 0; j < p; ++j)
                r(i, j) = acc[j];
        }
        return r;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            const BigInt &x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < p; ++j)
                r(i, j) += x * b(k, j);
        }
    return r;
}

std::vector<BigInt> operator*(const IntMatrix &a, const std::vector<BigInt> &v)
{
    if (a.cols_ != v.size())
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    std::vector<BigInt> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a(i, k) != 0 && v[k] != 0)
                r[i] += a(i, k) * v[k];
    return r;
}

IntMatrix matrix_power(const IntMatrix &m, unsigned long long k)
{
    if (!m.is_square())
        throw std::invalid_argument("matrix_power: non-square matrix");
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (k > 0) {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k > 0)
            base = base * base;
    }
    return result;
}

} // namespace ternop
