// Exact dense linear algebra over prime fields GF(p).
//
// Everything downstream (algebras, modules, Ext, approximations) reduces to
// the row reductions and solvers in this header.  All values are immutable
// after construction and all operations are pure, so matrices may be shared
// freely between threads.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reclift {

/// Thrown on malformed caller input (shape mismatches, non-prime moduli, ...).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a construction's postcondition cannot be certified.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a degree/resolution bound is exceeded before an answer is known.
struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Residue arithmetic mod a (small) prime p.
struct Fp {
    uint32_t p;

    explicit Fp(uint32_t prime) : p(prime) {
        if (!is_prime(prime)) throw input_error("modulus " + std::to_string(prime) + " is not prime");
    }

    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p - b) % p; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw input_error("division by zero in GF(p)");
        // Fermat: a^(p-2)
        uint32_t e = p - 2, base = a % p, acc = 1;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
};

/// A scalar together with its modulus; used at API boundaries (e.g. relation
/// coefficients in quiver presentations).
struct Scalar {
    uint32_t value;
    uint32_t p;

    Scalar(int64_t v, uint32_t prime) : p(prime) {
        value = Fp(prime).reduce(v);
    }
};

using Vec = std::vector<uint32_t>;

/// Dense row-major matrix over GF(p).
class Mat {
public:
    Mat() : rows_(0), cols_(0), p_(2) {}

    Mat(int rows, int cols, uint32_t p) : rows_(rows), cols_(cols), p_(p), a_(size_t(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
        (void)Fp(p);
    }

    static Mat identity(int n, uint32_t p) {
        Mat m(n, n, p);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat from_rows(std::initializer_list<std::initializer_list<int64_t>> rows, uint32_t p) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
        Mat m(r, c, p);
        Fp f(p);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c) throw input_error("ragged row list");
            int j = 0;
            for (int64_t v : row) m(i, j++) = f.reduce(v);
            ++i;
        }
        return m;
    }

    /// Single column from a coordinate vector.
    static Mat column(const Vec& v, uint32_t p) {
        Mat m(static_cast<int>(v.size()), 1, p);
        for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i] % p;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint32_t modulus() const { return p_; }

    uint32_t& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    uint32_t operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (uint32_t v : a_)
            if (v) return false;
        return true;
    }

    Vec col_vec(int j) const {
        Vec v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows_; ++i) {
            os << "[";
            for (int j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? "," : "");
            os << "]" << (i + 1 < rows_ ? "," : "");
        }
        os << "]";
        return os.str();
    }

private:
    int rows_, cols_;
    uint32_t p_;
    std::vector<uint32_t> a_;
};

inline void check_same_modulus(const Mat& a, const Mat& b) {
    if (a.modulus() != b.modulus()) throw input_error("modulus mismatch");
}

inline Mat operator+(const Mat& a, const Mat& b) {
    check_same_modulus(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw input_error("shape mismatch in +");
    Fp f(a.modulus());
    Mat r(a.rows(), a.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = f.add(a(i, j), b(i, j));
    return r;
}

inline Mat operator-(const Mat& a, const Mat& b) {
    check_same_modulus(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw input_error("shape mismatch in -");
    Fp f(a.modulus());
    Mat r(a.rows(), a.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = f.sub(a(i, j), b(i, j));
    return r;
}

inline Mat operator*(const Mat& a, const Mat& b) {
    check_same_modulus(a, b);
    if (a.cols() != b.rows()) throw input_error("shape mismatch in *");
    Fp f(a.modulus());
    Mat r(a.rows(), b.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            uint32_t aik = a(i, k);
            if (!aik) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) = f.add(r(i, j), f.mul(aik, b(k, j)));
        }
    return r;
}

inline Mat scale(uint32_t c, const Mat& a) {
    Fp f(a.modulus());
    Mat r(a.rows(), a.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = f.mul(c % a.modulus(), a(i, j));
    return r;
}

inline Mat transpose(const Mat& a) {
    Mat r(a.cols(), a.rows(), a.modulus());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

inline Mat hstack(const Mat& a, const Mat& b) {
    check_same_modulus(a, b);
    if (a.rows() != b.rows()) throw input_error("hstack: row mismatch");
    Mat r(a.rows(), a.cols() + b.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

inline Mat vstack(const Mat& a, const Mat& b) {
    check_same_modulus(a, b);
    if (a.cols() != b.cols()) throw input_error("vstack: column mismatch");
    Mat r(a.rows() + b.rows(), a.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

/// Kronecker product with row-major index convention:
/// (a ⊗ b)[(i1,i2),(j1,j2)] = a[i1,j1]·b[i2,j2], combined index i1·b.rows+i2.
inline Mat kron(const Mat& a, const Mat& b) {
    check_same_modulus(a, b);
    Fp f(a.modulus());
    Mat r(a.rows() * b.rows(), a.cols() * b.cols(), a.modulus());
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            uint32_t v = a(i1, j1);
            if (!v) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2)
                for (int j2 = 0; j2 < b.cols(); ++j2)
                    r(i1 * b.rows() + i2, j1 * b.cols() + j2) = f.mul(v, b(i2, j2));
        }
    return r;
}

/// Reduced row echelon form.  Deterministic: the pivot of each step is the
/// first nonzero entry scanning rows top-down within the leftmost unfinished
/// column, so all downstream bases are reproducible run to run.
inline std::pair<Mat, std::vector<int>> rref(const Mat& m) {
    Mat r = m;
    Fp f(r.modulus());
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < r.rows(); ++i)
            if (r(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < r.cols(); ++j) std::swap(r(piv, j), r(row, j));
        uint32_t inv = f.inv(r(row, col));
        for (int j = 0; j < r.cols(); ++j) r(row, j) = f.mul(inv, r(row, j));
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row || !r(i, col)) continue;
            uint32_t c = r(i, col);
            for (int j = 0; j < r.cols(); ++j) r(i, j) = f.sub(r(i, j), f.mul(c, r(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {r, pivots};
}

inline int rank(const Mat& m) { return static_cast<int>(rref(m).second.size()); }

/// Basis of the right null space, one basis vector per column.
/// m * kernel_basis(m) = 0 exactly; column count = cols - rank.
inline Mat kernel_basis(const Mat& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Fp f(m.modulus());
    Mat k(m.cols(), static_cast<int>(free_cols.size()), m.modulus());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int j = free_cols[fi];
        k(j, static_cast<int>(fi)) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            k(pivots[pi], static_cast<int>(fi)) = f.neg(r(static_cast<int>(pi), j));
    }
    return k;
}

/// The pivot columns of m: a basis of the column space, as columns.
inline Mat image_basis(const Mat& m) {
    auto pivots = rref(m).second;
    Mat b(m.rows(), static_cast<int>(pivots.size()), m.modulus());
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < m.rows(); ++i) b(i, static_cast<int>(k)) = m(i, pivots[k]);
    return b;
}

/// Solve a·x = b (b may have several columns).  Returns the solution with all
/// free variables set to zero (rref pivot convention), or nullopt when the
/// system is inconsistent.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
    check_same_modulus(a, b);
    if (a.rows() != b.rows()) throw input_error("solve: row mismatch");
    auto [r, pivots] = rref(hstack(a, b));
    // Inconsistency: a pivot in the b-block.
    for (int c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols(), a.modulus());
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        for (int j = 0; j < b.cols(); ++j)
            x(pivots[pi], j) = r(static_cast<int>(pi), a.cols() + j);
    return x;
}

/// Inverse of a square invertible matrix; nullopt when singular.
inline std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto x = solve(a, Mat::identity(a.rows(), a.modulus()));
    if (!x) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return x;
}

inline bool is_invertible(const Mat& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

/// True iff every column of sub lies in the column span of space.
inline bool subspace_contains(const Mat& space, const Mat& sub) {
    if (sub.cols() == 0) return true;
    return rank(hstack(space, sub)) == rank(space);
}

/// Row-major vectorization of a matrix (rows concatenated), as one column.
inline Mat vectorize(const Mat& m) {
    Mat v(m.rows() * m.cols(), 1, m.modulus());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
    return v;
}

inline Mat unvectorize(const Mat& v, int rows, int cols) {
    if (v.rows() != rows * cols || v.cols() != 1) throw input_error("unvectorize: bad shape");
    Mat m(rows, cols, v.modulus());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = v(i * cols + j, 0);
    return m;
}

/// Reduction modulo a subspace (given by spanning columns): canonical
/// coordinates on a complement of the subspace, choosing non-pivot
/// coordinates of the subspace's rref.
class SubspaceReduction {
public:
    explicit SubspaceReduction(const Mat& subspace_cols)
        : ambient_(subspace_cols.rows()), p_(subspace_cols.modulus()) {
        auto [rr, pivots] = rref(transpose(subspace_cols));
        rref_rows_ = rr;
        pivots_ = pivots;
        std::vector<bool> is_piv(ambient_, false);
        for (int c : pivots_) is_piv[c] = true;
        for (int c = 0; c < ambient_; ++c)
            if (!is_piv[c]) complement_.push_back(c);
    }

    int ambient() const { return ambient_; }
    int quotient_dim() const { return static_cast<int>(complement_.size()); }

    /// Kill the pivot coordinates by subtracting subspace elements.
    Mat reduce(const Mat& cols) const {
        Fp f(p_);
        Mat out = cols;
        for (int j = 0; j < out.cols(); ++j)
            for (size_t r = 0; r < pivots_.size(); ++r) {
                uint32_t c = out(pivots_[r], j);
                if (!c) continue;
                for (int i = 0; i < ambient_; ++i)
                    out(i, j) = f.sub(out(i, j), f.mul(c, rref_rows_(static_cast<int>(r), i)));
            }
        return out;
    }

    /// Quotient coordinates (complement positions of the reduction).
    Mat project(const Mat& cols) const {
        Mat red = reduce(cols);
        Mat out(quotient_dim(), cols.cols(), p_);
        for (int j = 0; j < cols.cols(); ++j)
            for (int k = 0; k < quotient_dim(); ++k) out(k, j) = red(complement_[k], j);
        return out;
    }

    /// Inclusion of the chosen complement back into the ambient space.
    Mat section() const {
        Mat s(ambient_, quotient_dim(), p_);
        for (int k = 0; k < quotient_dim(); ++k) s(complement_[k], k) = 1;
        return s;
    }

private:
    int ambient_;
    uint32_t p_;
    Mat rref_rows_ = Mat(0, 0, 2);
    std::vector<int> pivots_;
    std::vector<int> complement_;
};

// Vec helpers (coordinate vectors of algebra elements).

inline Vec vec_zero(size_t n) { return Vec(n, 0); }

inline Vec vec_unit(size_t n, size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

inline Vec vec_add(const Vec& a, const Vec& b, uint32_t p) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b, uint32_t p) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + p - b[i] % p) % p;
    return r;
}

inline Vec vec_scale(uint32_t c, const Vec& a, uint32_t p) {
    Fp f(p);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c % p, a[i]);
    return r;
}

inline bool vec_is_zero(const Vec& a) {
    for (uint32_t v : a)
        if (v) return false;
    return true;
}

inline Mat mat_from_columns(const std::vector<Vec>& cols, int rows, uint32_t p) {
    Mat m(rows, static_cast<int>(cols.size()), p);
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows) throw input_error("column length mismatch");
        for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][i] % p;
    }
    return m;
}

/// Apply a matrix to a coordinate vector.
inline Vec apply_vec(const Mat& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw input_error("apply: length mismatch");
    Fp f(m.modulus());
    Vec r(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        uint32_t acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(m(i, j), v[j] % m.modulus()));
        r[i] = acc;
    }
    return r;
}

}  // namespace reclift
