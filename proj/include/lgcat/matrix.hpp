#ifndef LGCAT_MATRIX_HPP
#define LGCAT_MATRIX_HPP

#include <functional>
#include <vector>

#include "lgcat/poly.hpp"

namespace lgcat {

// Dense row-major matrix of polynomials; all entries share one ring context.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingCtxPtr ctx, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(RingCtxPtr ctx, std::size_t n);
    static PolyMatrix scalar(RingCtxPtr ctx, std::size_t n, const Poly& f);

    const RingCtxPtr& ctx() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    Poly& at(std::size_t r, std::size_t c);
    const Poly& at(std::size_t r, std::size_t c) const;

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    PolyMatrix mul_poly(const Poly& f) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    PolyMatrix transpose() const;
    PolyMatrix embed(const RingCtxPtr& target) const;
    PolyMatrix map(const std::function<Poly(const Poly&)>& fn) const;

    // Kronecker product: (A⊗B)[(i,k),(j,l)] = A[i][j] * B[k][l], row-major on
    // the first index.
    static PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);

    std::vector<Poly> column(std::size_t c) const;

    std::string str() const;

private:
    RingCtxPtr ctx_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> entries_;
};

// Assembler for block matrices: fixed block grid, absent blocks are zero.
class BlockMatrix {
public:
    BlockMatrix(RingCtxPtr ctx, std::vector<std::size_t> row_sizes,
                std::vector<std::size_t> col_sizes);
    void set(std::size_t bi, std::size_t bj, const PolyMatrix& block);
    void add(std::size_t bi, std::size_t bj, const PolyMatrix& block);
    PolyMatrix assemble() const;

private:
    PolyMatrix m_;
    std::vector<std::size_t> row_off_, col_off_;
    std::vector<std::size_t> row_sizes_, col_sizes_;
};

} // namespace lgcat

#endif
