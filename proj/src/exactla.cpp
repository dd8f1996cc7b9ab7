#include "itdim/exactla.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace itdim {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Residue mod_reduce(long long value, Residue p) {
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Residue>(r);
}

Residue mod_mul(Residue a, Residue b, Residue p) {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}

Residue mod_add(Residue a, Residue b, Residue p) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<Residue>(s >= p ? s - p : s);
}

Residue mod_sub(Residue a, Residue b, Residue p) {
    return a >= b ? a - b : static_cast<Residue>(static_cast<std::uint64_t>(a) + p - b);
}

Residue mod_pow(Residue a, std::uint64_t e, Residue p) {
    std::uint64_t result = 1 % p, base = a % p;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Residue>(result);
}

Residue mod_inv(Residue a, Residue p) {
    if (a % p == 0) throw std::domain_error("mod_inv: zero has no inverse");
    return mod_pow(a, p - 2, p);
}

// ---------------------------------------------------------------- FpMatrix

FpMatrix::FpMatrix(int rows, int cols, Residue p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows) * cols, 0) {
    assert(rows >= 0 && cols >= 0);
}

FpMatrix::FpMatrix(int rows, int cols, Residue p, std::vector<Residue> entries)
    : rows_(rows), cols_(cols), p_(p), data_(std::move(entries)) {
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("FpMatrix: entry count does not match shape");
    for (auto& v : data_) v %= p_;
}

FpMatrix FpMatrix::identity(int n, Residue p) {
    FpMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m(i, i) = 1 % p;
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<long long>>& rows, Residue p) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    FpMatrix m(r, c, p);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("FpMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

FpMatrix FpMatrix::column(int c) const {
    FpMatrix out(rows_, 1, p_);
    for (int i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, c);
    return out;
}

FpMatrix FpMatrix::columns(std::span<const int> which) const {
    FpMatrix out(rows_, static_cast<int>(which.size()), p_);
    for (int i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < which.size(); ++k) out(i, static_cast<int>(k)) = (*this)(i, which[k]);
    return out;
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("FpMatrix multiply: shape mismatch");
    const Residue p = a.prime();
    FpMatrix c(a.rows(), b.cols(), p);
    std::vector<std::uint64_t> acc(b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a(i, k);
            if (!aik) continue;
            auto brow = b.row(k);
            for (int j = 0; j < b.cols(); ++j) {
                acc[j] += aik * brow[j];
                // keep headroom: p < 2^32 so two products fit in 2^64 only after reduction
                if (acc[j] >= (std::uint64_t{1} << 62)) acc[j] %= p;
            }
        }
        for (int j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Residue>(acc[j] % p);
    }
    return c;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("FpMatrix add: shape mismatch");
    FpMatrix c(a.rows(), a.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = mod_add(a(i, j), b(i, j), a.prime());
    return c;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("FpMatrix sub: shape mismatch");
    FpMatrix c(a.rows(), a.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = mod_sub(a(i, j), b(i, j), a.prime());
    return c;
}

FpMatrix scale(const FpMatrix& a, Residue s) {
    FpMatrix c(a.rows(), a.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = mod_mul(a(i, j), s, a.prime());
    return c;
}

FpMatrix hconcat(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
    FpMatrix c(a.rows(), a.cols() + b.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

FpMatrix vconcat(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vconcat: column mismatch");
    FpMatrix c(a.rows() + b.rows(), a.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
    return c;
}

FpMatrix block_diagonal(const std::vector<FpMatrix>& blocks, Residue p) {
    int r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    FpMatrix out(r, c, p);
    int r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

FpMatrix matrix_power(const FpMatrix& a, std::uint64_t e) {
    FpMatrix result = FpMatrix::identity(a.rows(), a.prime());
    FpMatrix base = a;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

FpMatrix random_matrix(int rows, int cols, Residue p, std::mt19937_64& rng) {
    FpMatrix m(rows, cols, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = static_cast<Residue>(rng() % p);
    return m;
}

// ------------------------------------------------------------- elimination

Echelon rref(const FpMatrix& m) {
    Echelon e{m, {}};
    FpMatrix& a = e.reduced;
    const Residue p = a.prime();
    const int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) std::swap(a(piv, j), a(r, j));
        const Residue inv = mod_inv(a(r, c), p);
        for (int j = c; j < cols; ++j) a(r, j) = mod_mul(a(r, j), inv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r || !a(i, c)) continue;
            const Residue f = a(i, c);
            for (int j = c; j < cols; ++j)
                if (a(r, j)) a(i, j) = mod_sub(a(i, j), mod_mul(f, a(r, j), p), p);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

int rank_ff(const FpMatrix& m) {
    // eliminate on the smaller orientation
    if (m.rows() > m.cols()) return static_cast<int>(rref(m.transpose()).pivots.size());
    return static_cast<int>(rref(m).pivots.size());
}

FpMatrix kernel_basis_ff(const FpMatrix& m) {
    const Residue p = m.prime();
    const Echelon e = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : e.pivots) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FpMatrix basis(m.cols(), static_cast<int>(free_cols.size()), p);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int f = free_cols[k];
        basis(f, static_cast<int>(k)) = 1 % p;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            basis(e.pivots[i], static_cast<int>(k)) = mod_sub(0, e.reduced(static_cast<int>(i), f), p);
    }
    return basis;
}

std::optional<FpMatrix> solve_ff(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_ff: row counts differ");
    const Residue p = a.prime();
    const Echelon e = rref(hconcat(a, b));
    for (int c : e.pivots)
        if (c >= a.cols()) return std::nullopt;
    FpMatrix x(a.cols(), b.cols(), p);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            x(e.pivots[i], j) = e.reduced(static_cast<int>(i), a.cols() + j);
    return x;
}

FpMatrix column_space_basis(const FpMatrix& m) {
    const Echelon e = rref(m);
    return m.columns(e.pivots);
}

FpMatrix complement_basis(const FpMatrix& sub, int ambient_dim) {
    const Residue p = sub.prime();
    FpMatrix current = sub.cols() ? sub : FpMatrix(ambient_dim, 0, p);
    std::vector<int> added;
    int rank = current.cols();
    for (int i = 0; i < ambient_dim && rank < ambient_dim; ++i) {
        FpMatrix unit(ambient_dim, 1, p);
        unit(i, 0) = 1 % p;
        FpMatrix trial = hconcat(current, unit);
        if (rank_ff(trial) > rank) {
            current = std::move(trial);
            added.push_back(i);
            ++rank;
        }
    }
    FpMatrix out(ambient_dim, static_cast<int>(added.size()), p);
    for (std::size_t k = 0; k < added.size(); ++k) out(added[k], static_cast<int>(k)) = 1 % p;
    return out;
}

bool is_invertible(const FpMatrix& m) {
    return m.rows() == m.cols() && rank_ff(m) == m.rows();
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const int n = m.rows();
    const Echelon e = rref(hconcat(m, FpMatrix::identity(n, m.prime())));
    if (static_cast<int>(e.pivots.size()) < n || (n && e.pivots[n - 1] >= n)) return std::nullopt;
    FpMatrix inv(n, n, m.prime());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Residue trace(const FpMatrix& m) {
    Residue t = 0;
    for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) t = mod_add(t, m(i, i), m.prime());
    return t;
}

// -------------------------------------------------------------- polynomials

namespace {

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, Residue p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod_add(c[i + j], mod_mul(a[i], b[j], p), p);
    }
    trim(c);
    return c;
}

// Returns the remainder of a modulo b; quotient written to *q when non-null.
FpPoly poly_divmod(FpPoly a, const FpPoly& b, Residue p, FpPoly* q = nullptr) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const Residue lead_inv = mod_inv(b.back(), p);
    FpPoly quot(a.size() >= b.size() ? a.size() - db : 0, 0);
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Residue f = mod_mul(a.back(), lead_inv, p);
        quot[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod_sub(a[shift + j], mod_mul(f, b[j], p), p);
        trim(a);
    }
    if (q) {
        trim(quot);
        *q = std::move(quot);
    }
    return a;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, Residue p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = poly_divmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Residue inv = mod_inv(a.back(), p);
        for (auto& c : a) c = mod_mul(c, inv, p);
    }
    return a;
}

FpPoly poly_powmod(FpPoly base, std::uint64_t e, const FpPoly& mod, Residue p) {
    FpPoly result{1};
    base = poly_divmod(base, mod, p);
    while (e) {
        if (e & 1) result = poly_divmod(poly_mul(result, base, p), mod, p);
        e >>= 1;
        if (e) base = poly_divmod(poly_mul(base, base, p), mod, p);
    }
    return result;
}

FpPoly poly_sub(FpPoly a, const FpPoly& b, Residue p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_sub(a[i], b[i], p);
    trim(a);
    return a;
}

// g is monic, squarefree and a product of linear factors.
void split_linear(const FpPoly& g, Residue p, std::mt19937_64& rng, std::vector<Residue>& out) {
    const std::size_t deg = g.size() - 1;
    if (deg == 0) return;
    if (deg == 1) {
        out.push_back(mod_sub(0, g[0], p));
        return;
    }
    for (;;) {
        const Residue a = static_cast<Residue>(rng() % p);
        FpPoly h = poly_powmod(FpPoly{a, 1}, (p - 1) / 2, g, p);
        h = poly_sub(h, FpPoly{1}, p);
        FpPoly d = poly_gcd(g, h, p);
        const std::size_t dd = d.empty() ? 0 : d.size() - 1;
        if (dd > 0 && dd < deg) {
            FpPoly rest;
            poly_divmod(g, d, p, &rest);
            split_linear(d, p, rng, out);
            split_linear(rest, p, rng, out);
            return;
        }
    }
}

}  // namespace

FpPoly char_poly(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
    const Residue p = m.prime();
    const int n = m.rows();
    FpMatrix h = m;
    // reduce to upper Hessenberg form by similarity
    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int i = j + 1; i < n; ++i)
            if (h(i, j)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != j + 1) {
            for (int c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
            for (int r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
        }
        const Residue inv = mod_inv(h(j + 1, j), p);
        for (int i = j + 2; i < n; ++i) {
            if (!h(i, j)) continue;
            const Residue u = mod_mul(h(i, j), inv, p);
            for (int c = 0; c < n; ++c) h(i, c) = mod_sub(h(i, c), mod_mul(u, h(j + 1, c), p), p);
            for (int r = 0; r < n; ++r) h(r, j + 1) = mod_add(h(r, j + 1), mod_mul(u, h(r, i), p), p);
        }
    }
    // characteristic polynomials of leading principal submatrices
    std::vector<FpPoly> polys(n + 1);
    polys[0] = FpPoly{1};
    for (int k = 1; k <= n; ++k) {
        const int kk = k - 1;
        FpPoly cur = poly_mul(FpPoly{mod_sub(0, h(kk, kk), p), 1}, polys[k - 1], p);
        Residue prod = 1;
        for (int i = kk - 1; i >= 0; --i) {
            prod = mod_mul(prod, h(i + 1, i), p);
            if (!prod) break;
            const Residue coef = mod_mul(h(i, kk), prod, p);
            if (!coef) continue;
            FpPoly term = polys[i];
            for (auto& c : term) c = mod_mul(c, coef, p);
            cur = poly_sub(cur, term, p);
        }
        if (cur.size() < static_cast<std::size_t>(k + 1)) cur.resize(k + 1, 0);
        polys[k] = std::move(cur);
    }
    FpPoly out = polys[n];
    out.resize(n + 1, 0);
    out[n] = 1 % p;
    return out;
}

std::vector<Residue> roots_ff(const FpPoly& f_in, Residue p, std::mt19937_64& rng) {
    if (p == 2) throw std::invalid_argument("roots_ff: requires an odd prime");
    FpPoly f = f_in;
    trim(f);
    if (f.size() <= 1) return {};
    const Residue inv = mod_inv(f.back(), p);
    for (auto& c : f) c = mod_mul(c, inv, p);
    FpPoly xp = poly_powmod(FpPoly{0, 1}, p, f, p);
    FpPoly g = poly_gcd(f, poly_sub(xp, FpPoly{0, 1}, p), p);
    std::vector<Residue> out;
    if (g.size() > 1) split_linear(g, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

FpPoly make_monic(FpPoly f, Residue p) {
    trim(f);
    if (f.empty()) return f;
    const Residue inv = mod_inv(f.back(), p);
    for (auto& c : f) c = mod_mul(c, inv, p);
    return f;
}

std::size_t degree(const FpPoly& f) { return f.empty() ? 0 : f.size() - 1; }

// g is monic, squarefree, and every irreducible factor has degree d.
void split_equal_degree(const FpPoly& g, std::size_t d, Residue p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    const std::size_t n = degree(g);
    if (n == d) {
        out.push_back(g);
        return;
    }
    for (;;) {
        FpPoly a(n, 0);
        for (auto& c : a) c = static_cast<Residue>(rng() % p);
        trim(a);
        if (degree(a) == 0) continue;
        // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
        FpPoly t{1}, cur = poly_divmod(a, g, p);
        for (std::size_t i = 0; i < d; ++i) {
            t = poly_divmod(poly_mul(t, cur, p), g, p);
            if (i + 1 < d) cur = poly_powmod(cur, p, g, p);
        }
        t = poly_sub(poly_powmod(t, (p - 1) / 2, g, p), FpPoly{1}, p);
        const FpPoly h = poly_gcd(g, t, p);
        if (degree(h) > 0 && degree(h) < n) {
            FpPoly rest;
            poly_divmod(g, h, p, &rest);
            split_equal_degree(h, d, p, rng, out);
            split_equal_degree(make_monic(rest, p), d, p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<FpPoly> distinct_irreducible_factors(const FpPoly& f_in, Residue p, std::mt19937_64& rng) {
    if (p == 2) throw std::invalid_argument("distinct_irreducible_factors: requires an odd prime");
    FpPoly f = make_monic(f_in, p);
    if (degree(f) == 0) return {};
    if (degree(f) >= p) throw std::invalid_argument("distinct_irreducible_factors: degree must be below p");
    // squarefree part; valid because every multiplicity is < p
    FpPoly deriv;
    for (std::size_t i = 1; i < f.size(); ++i) deriv.push_back(mod_mul(f[i], static_cast<Residue>(i % p), p));
    trim(deriv);
    FpPoly rest = f;
    if (!deriv.empty()) {
        const FpPoly g = poly_gcd(f, deriv, p);
        poly_divmod(f, g, p, &rest);
        rest = make_monic(rest, p);
    }
    std::vector<FpPoly> out;
    FpPoly h{0, 1};
    for (std::size_t d = 1; 2 * d <= degree(rest); ++d) {
        h = poly_powmod(h, p, rest, p);
        const FpPoly g = poly_gcd(rest, poly_sub(h, FpPoly{0, 1}, p), p);
        if (degree(g) > 0) {
            split_equal_degree(g, d, p, rng, out);
            FpPoly q;
            poly_divmod(rest, g, p, &q);
            rest = make_monic(q, p);
            h = poly_divmod(h, rest, p);
        }
    }
    if (degree(rest) > 0) out.push_back(rest);
    std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

FpMatrix poly_eval(const FpPoly& f, const FpMatrix& m) {
    const Residue p = m.prime();
    FpMatrix acc(m.rows(), m.cols(), p);
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        acc = acc * m;
        for (int i = 0; i < m.rows(); ++i) acc(i, i) = mod_add(acc(i, i), *it % p, p);
    }
    return acc;
}

// --------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

int rank_int(const IntMatrix& m) {
    IntMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    BigInt prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                // exact division is guaranteed by Sylvester's identity
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

std::string to_string(const FpMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < m.rows(); ++i) {
        if (i) os << ',';
        os << '[';
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace itdim
