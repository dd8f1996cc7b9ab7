#pragma once

// Exact linear algebra over a prime field F_p and over the integers.
//
// Matrices are dense and row-major. An FpMatrix carries its modulus so that
// values are self-describing; mixing moduli in one operation is a logic error.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace itdim {

using Residue = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

Residue mod_reduce(long long value, Residue p);
Residue mod_mul(Residue a, Residue b, Residue p);
Residue mod_add(Residue a, Residue b, Residue p);
Residue mod_sub(Residue a, Residue b, Residue p);
Residue mod_pow(Residue a, std::uint64_t e, Residue p);
Residue mod_inv(Residue a, Residue p);

class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(int rows, int cols, Residue p);
    FpMatrix(int rows, int cols, Residue p, std::vector<Residue> entries);

    static FpMatrix identity(int n, Residue p);
    static FpMatrix from_rows(const std::vector<std::vector<long long>>& rows, Residue p);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Residue prime() const noexcept { return p_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Residue operator()(int r, int c) const { return data_[idx(r, c)]; }
    Residue& operator()(int r, int c) { return data_[idx(r, c)]; }
    void set(int r, int c, long long v) { data_[idx(r, c)] = mod_reduce(v, p_); }

    std::span<const Residue> row(int r) const {
        return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }
    const std::vector<Residue>& data() const noexcept { return data_; }

    FpMatrix transpose() const;
    FpMatrix column(int c) const;
    FpMatrix columns(std::span<const int> which) const;
    bool is_zero() const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * cols_ + c;
    }

    int rows_ = 0;
    int cols_ = 0;
    Residue p_ = 2;
    std::vector<Residue> data_;
};

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
FpMatrix scale(const FpMatrix& a, Residue s);
FpMatrix hconcat(const FpMatrix& a, const FpMatrix& b);
FpMatrix vconcat(const FpMatrix& a, const FpMatrix& b);
FpMatrix block_diagonal(const std::vector<FpMatrix>& blocks, Residue p);
FpMatrix matrix_power(const FpMatrix& a, std::uint64_t e);
FpMatrix random_matrix(int rows, int cols, Residue p, std::mt19937_64& rng);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
    FpMatrix reduced;
    std::vector<int> pivots;
};

Echelon rref(const FpMatrix& m);

int rank_ff(const FpMatrix& m);

/// Columns form a basis of {x : m x = 0}; count = cols - rank.
FpMatrix kernel_basis_ff(const FpMatrix& m);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<FpMatrix> solve_ff(const FpMatrix& a, const FpMatrix& b);

/// Columns of m forming a basis of its column space (earliest pivots).
FpMatrix column_space_basis(const FpMatrix& m);

/// Extends the columns of `sub` (assumed independent) with standard basis
/// vectors, in index order, to a basis of the ambient space; returns only the
/// added vectors.
FpMatrix complement_basis(const FpMatrix& sub, int ambient_dim);

bool is_invertible(const FpMatrix& m);
std::optional<FpMatrix> inverse(const FpMatrix& m);
Residue trace(const FpMatrix& m);

/// Polynomials over F_p, coefficient i is the coefficient of x^i.
using FpPoly = std::vector<Residue>;

FpPoly char_poly(const FpMatrix& m);

/// Distinct roots in F_p, sorted ascending. Requires p odd.
std::vector<Residue> roots_ff(const FpPoly& f, Residue p, std::mt19937_64& rng);

/// Monic irreducible factors of f without multiplicity, sorted by degree and
/// then coefficients. Requires p odd and deg f < p.
std::vector<FpPoly> distinct_irreducible_factors(const FpPoly& f, Residue p, std::mt19937_64& rng);

/// f(m) for a square matrix m.
FpMatrix poly_eval(const FpPoly& f, const FpMatrix& m);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const BigInt& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    IntMatrix transpose() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> data_;
};

/// Rank over the rationals by fraction-free (Bareiss) elimination.
int rank_int(const IntMatrix& m);

std::string to_string(const FpMatrix& m);

}  // namespace itdim
