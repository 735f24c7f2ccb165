#include "aer/matrix.hpp"

#include <cctype>
#include <sstream>

namespace aer {

Matrix::Matrix(int dim, std::vector<gf256::Elem> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_ < 1) throw BadDimension(dim_);
    if (entries_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_))
        throw LengthMismatch("matrix entry count " + std::to_string(entries_.size()) +
                             " for dimension " + std::to_string(dim_));
}

Matrix Matrix::identity(int n) {
    if (n < 1) throw BadDimension(n);
    std::vector<gf256::Elem> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1)] = 1;
    return Matrix(n, std::move(e));
}

Matrix Matrix::zero(int n) {
    if (n < 1) throw BadDimension(n);
    return Matrix(n, std::vector<gf256::Elem>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0));
}

Matrix Matrix::random(int n, SeededRng& rng) {
    if (n < 1) throw BadDimension(n);
    std::vector<gf256::Elem> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (auto& b : e) b = rng.next_byte();
    return Matrix(n, std::move(e));
}

bool Matrix::is_identity() const { return *this == identity(dim_); }

bool Matrix::is_zero() const {
    for (gf256::Elem e : entries_)
        if (e != 0) return false;
    return true;
}

namespace {
void require_same_dim(const Matrix& x, const Matrix& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch(x.dim(), y.dim());
}
} // namespace

Matrix mat_add(const Matrix& x, const Matrix& y) {
    require_same_dim(x, y);
    std::vector<gf256::Elem> e(x.entries().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = x.entries()[i] ^ y.entries()[i];
    return Matrix(x.dim(), std::move(e));
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
    require_same_dim(x, y);
    const int n = x.dim();
    std::vector<gf256::Elem> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            gf256::Elem xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < n; ++j)
                e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] ^=
                    gf256::mul(xik, y.at(k, j));
        }
    return Matrix(n, std::move(e));
}

Matrix mat_pow(const Matrix& x, const BigExponent& e) {
    Matrix acc = Matrix::identity(x.dim());
    const int bits = e.bit_length();
    for (int i = 0; i < bits; ++i) {
        acc = mat_mul(acc, acc);
        if (e.bit_from_msb(i)) acc = mat_mul(acc, x);
    }
    return acc;
}

Matrix mat_pow(const Matrix& x, std::uint64_t e) { return mat_pow(x, BigExponent::from_u64(e)); }

namespace {

gf256::Elem det_cofactor(const Matrix& x) {
    const int n = x.dim();
    if (n == 1) return x.at(0, 0);
    if (n == 2)
        return gf256::add(gf256::mul(x.at(0, 0), x.at(1, 1)), gf256::mul(x.at(0, 1), x.at(1, 0)));
    // n == 3; no signs in characteristic 2
    gf256::Elem d = 0;
    for (int j = 0; j < 3; ++j) {
        int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
        gf256::Elem minor = gf256::add(gf256::mul(x.at(1, j1), x.at(2, j2)),
                                       gf256::mul(x.at(1, j2), x.at(2, j1)));
        d = gf256::add(d, gf256::mul(x.at(0, j), minor));
    }
    return d;
}

gf256::Elem det_gauss(const Matrix& x) {
    const int n = x.dim();
    std::vector<gf256::Elem> a = x.entries();
    auto at = [&](int i, int j) -> gf256::Elem& {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    };
    gf256::Elem det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col)
            for (int j = 0; j < n; ++j) std::swap(at(pivot, j), at(col, j)); // no sign flip in char 2
        gf256::Elem p = at(col, col);
        det = gf256::mul(det, p);
        gf256::Elem pinv = gf256::inv(p);
        for (int row = col + 1; row < n; ++row) {
            gf256::Elem f = gf256::mul(at(row, col), pinv);
            if (f == 0) continue;
            for (int j = col; j < n; ++j) at(row, j) ^= gf256::mul(f, at(col, j));
        }
    }
    return det;
}

} // namespace

gf256::Elem tensor_det(const Matrix& x) {
    return x.dim() <= 3 ? det_cofactor(x) : det_gauss(x);
}

std::string cardinality(int n) {
    if (n < 1) throw BadDimension(n);
    return BigExponent::pow_of_256(n * n).to_decimal();
}

std::string to_text(const Matrix& x) {
    std::ostringstream os;
    os << '{';
    for (int i = 0; i < x.dim(); ++i) {
        if (i) os << ',';
        os << '{';
        for (int j = 0; j < x.dim(); ++j) {
            if (j) os << ',';
            os << static_cast<int>(x.at(i, j));
        }
        os << '}';
    }
    os << '}';
    return os.str();
}

namespace {

struct TextCursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
        ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    int number() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected a decimal byte at offset " + std::to_string(pos));
        int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 255) throw ParseError("entry exceeds 255");
            ++pos;
        }
        return v;
    }
};

} // namespace

Matrix parse_matrix(const std::string& text) {
    TextCursor c{text};
    c.expect('{');
    std::vector<std::vector<gf256::Elem>> rows;
    for (;;) {
        c.expect('{');
        std::vector<gf256::Elem> row;
        for (;;) {
            row.push_back(static_cast<gf256::Elem>(c.number()));
            if (c.peek(',')) {
                c.expect(',');
                continue;
            }
            break;
        }
        c.expect('}');
        rows.push_back(std::move(row));
        if (c.peek(',')) {
            c.expect(',');
            continue;
        }
        break;
    }
    c.expect('}');
    c.skip_ws();
    if (c.pos != text.size()) throw ParseError("trailing characters after matrix");

    const std::size_t n = rows.size();
    std::vector<gf256::Elem> entries;
    for (const auto& row : rows) {
        if (row.size() != n) throw ParseError("matrix is not square");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(static_cast<int>(n), std::move(entries));
}

namespace {

std::string poly_of(gf256::Elem e) {
    if (e == 0) return "0";
    std::string out;
    for (int i = 0; i < 8; ++i) {
        if (!((e >> i) & 1)) continue;
        if (!out.empty()) out += "+";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "x";
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

std::string bits_of(gf256::Elem e) {
    std::string out = "{";
    for (int i = 0; i < 8; ++i) {
        if (i) out += ",";
        out += ((e >> i) & 1) ? '1' : '0';
    }
    out += "}_2";
    return out;
}

template <typename Render>
std::string grid(const Matrix& x, Render render) {
    std::ostringstream os;
    for (int i = 0; i < x.dim(); ++i) {
        os << "( ";
        for (int j = 0; j < x.dim(); ++j) {
            if (j) os << "  ";
            os << render(x.at(i, j));
        }
        os << " )\n";
    }
    return os.str();
}

} // namespace

MatrixViews render_views(const Matrix& x) {
    return MatrixViews{
        grid(x, [](gf256::Elem e) { return std::to_string(static_cast<int>(e)); }),
        grid(x, bits_of),
        grid(x, poly_of),
    };
}

} // namespace aer
