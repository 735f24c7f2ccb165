#ifndef AER_MATRIX_HPP
#define AER_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "aer/big_exponent.hpp"
#include "aer/errors.hpp"
#include "aer/field.hpp"
#include "aer/rng.hpp"

namespace aer {

// Square matrix over GF(256), the ring element of the framework. Immutable
// value type: all operations return fresh matrices.
class Matrix {
public:
    Matrix(int dim, std::vector<gf256::Elem> entries);

    static Matrix identity(int n);
    static Matrix zero(int n);
    static Matrix random(int n, SeededRng& rng);

    int dim() const { return dim_; }
    gf256::Elem at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
                        static_cast<std::size_t>(col)];
    }
    const std::vector<gf256::Elem>& entries() const { return entries_; }

    bool is_identity() const;
    bool is_zero() const;

    bool operator==(const Matrix&) const = default;

private:
    int dim_;
    std::vector<gf256::Elem> entries_; // row-major, dim*dim bytes
};

// Entrywise XOR.
Matrix mat_add(const Matrix& x, const Matrix& y);

// Matrix product with GF(256) scalar arithmetic. Non-commutative in general.
Matrix mat_mul(const Matrix& x, const Matrix& y);

// Left-to-right binary exponentiation; mat_pow(x, 0) = identity.
Matrix mat_pow(const Matrix& x, const BigExponent& e);
Matrix mat_pow(const Matrix& x, std::uint64_t e);

// Determinant with field sum/product; in characteristic 2 the Leibniz signs
// vanish. Cofactor expansion for n <= 3, Gaussian elimination above.
gf256::Elem tensor_det(const Matrix& x);

// Exact decimal string of 256^(n^2), the number of n-dimensional elements.
std::string cardinality(int n);

// Text form `{{a,b},{c,d}}` with decimal byte values.
std::string to_text(const Matrix& x);
Matrix parse_matrix(const std::string& text);

// The three renderings of one element: decimal, LSB-first coefficient bits,
// and polynomials in ascending powers of x.
struct MatrixViews {
    std::string decimal;
    std::string bit_tensor;
    std::string polynomial;
};
MatrixViews render_views(const Matrix& x);

} // namespace aer

#endif
