#include "lgcat/matrix.hpp"

#include <numeric>

namespace lgcat {

PolyMatrix::PolyMatrix(RingCtxPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols),
      entries_(rows * cols, Poly::zero(ctx_)) {}

PolyMatrix PolyMatrix::identity(RingCtxPtr ctx, std::size_t n) {
    PolyMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Poly::from_long(ctx, 1);
    return m;
}

PolyMatrix PolyMatrix::scalar(RingCtxPtr ctx, std::size_t n, const Poly& f) {
    PolyMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = f;
    return m;
}

Poly& PolyMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw MathError("matrix index out of range");
    return entries_[r * cols_ + c];
}

const Poly& PolyMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw MathError("matrix index out of range");
    return entries_[r * cols_ + c];
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix shape mismatch");
    PolyMatrix m = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        m.entries_[i] = entries_[i] + o.entries_[i];
    return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw MathError("matrix product shape mismatch");
    PolyMatrix m(ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Poly& b = o.at(k, j);
                if (b.is_zero()) continue;
                m.at(i, j) = m.at(i, j) + a * b;
            }
        }
    return m;
}

PolyMatrix PolyMatrix::mul_poly(const Poly& f) const {
    PolyMatrix m = *this;
    for (auto& e : m.entries_) e = e * f;
    return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

PolyMatrix PolyMatrix::embed(const RingCtxPtr& target) const {
    PolyMatrix m(target, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(i, j) = at(i, j).embed(target);
    return m;
}

PolyMatrix PolyMatrix::map(const std::function<Poly(const Poly&)>& fn) const {
    PolyMatrix m = *this;
    for (auto& e : m.entries_) e = fn(e);
    if (!m.entries_.empty()) m.ctx_ = m.entries_.front().ctx();
    return m;
}

PolyMatrix PolyMatrix::kronecker(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix m(a.ctx(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

std::vector<Poly> PolyMatrix::column(std::size_t c) const {
    std::vector<Poly> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, c));
    return v;
}

std::string PolyMatrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += "\"" + at(i, j).str() + "\"";
        }
        s += "]";
    }
    s += "]";
    return s;
}

BlockMatrix::BlockMatrix(RingCtxPtr ctx, std::vector<std::size_t> row_sizes,
                         std::vector<std::size_t> col_sizes)
    : row_sizes_(std::move(row_sizes)), col_sizes_(std::move(col_sizes)) {
    std::size_t r = 0, c = 0;
    for (auto s : row_sizes_) { row_off_.push_back(r); r += s; }
    for (auto s : col_sizes_) { col_off_.push_back(c); c += s; }
    m_ = PolyMatrix(std::move(ctx), r, c);
}

void BlockMatrix::set(std::size_t bi, std::size_t bj, const PolyMatrix& block) {
    if (block.rows() != row_sizes_.at(bi) || block.cols() != col_sizes_.at(bj))
        throw MathError("block shape mismatch");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            m_.at(row_off_[bi] + i, col_off_[bj] + j) = block.at(i, j);
}

void BlockMatrix::add(std::size_t bi, std::size_t bj, const PolyMatrix& block) {
    if (block.rows() != row_sizes_.at(bi) || block.cols() != col_sizes_.at(bj))
        throw MathError("block shape mismatch");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            m_.at(row_off_[bi] + i, col_off_[bj] + j) =
                m_.at(row_off_[bi] + i, col_off_[bj] + j) + block.at(i, j);
}

PolyMatrix BlockMatrix::assemble() const { return m_; }

} // namespace lgcat
