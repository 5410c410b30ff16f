#include "oneskel/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "oneskel/errors.hpp"

namespace oneskel {

namespace {

using BigRow = std::vector<BigInt>;

void require_same_length(const LatticeVector& a, const LatticeVector& b, const char* op)
{
    if (a.size() != b.size())
        throw DimensionError(std::string(op) + ": length mismatch " + std::to_string(a.size()) + " vs "
                             + std::to_string(b.size()));
}

Int gcd_of(const LatticeVector& v)
{
    Int g = 0;
    for (Int x : v)
        g = std::gcd(g, x);
    return g;
}

BigInt abs_big(const BigInt& z) { return z < 0 ? BigInt(-z) : z; }

/*
 * Row Hermite reduction over Z. Pivots are searched only in the first
 * `pivot_cols` columns; reduction above pivots uses the whole row. Returns the
 * number of pivots found (the rank of the leading block).
 */
std::size_t hermite_rows(std::vector<BigRow>& rows, std::size_t pivot_cols)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c)
    {
        while (true)
        {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
            {
                if (rows[i][c] == 0)
                    continue;
                if (best == rows.size() || abs_big(rows[i][c]) < abs_big(rows[best][c]))
                    best = i;
            }
            if (best == rows.size())
                break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i)
            {
                if (rows[i][c] == 0)
                    continue;
                BigInt q = rows[i][c] / rows[r][c];
                for (std::size_t j = 0; j < rows[i].size(); ++j)
                    rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (r >= rows.size() || rows[r][c] == 0)
            continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r])
                x = -x;
        for (std::size_t i = 0; i < r; ++i)
        {
            // floor division keeps entries above the pivot in [0, pivot)
            BigInt q = rows[i][c] / rows[r][c];
            if (rows[i][c] - q * rows[r][c] < 0)
                q -= 1;
            if (q != 0)
                for (std::size_t j = 0; j < rows[i].size(); ++j)
                    rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<BigRow> to_big_rows(std::span<const LatticeVector> vectors, std::size_t dim)
{
    std::vector<BigRow> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors)
    {
        if (v.size() != dim)
            throw DimensionError("vector of length " + std::to_string(v.size()) + " in rank-"
                                 + std::to_string(dim) + " lattice");
        BigRow row(dim);
        for (std::size_t j = 0; j < dim; ++j)
            row[j] = v[j];
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t i)
{
    LatticeVector v = zero(rank);
    v.entries_.at(i) = 1;
    return v;
}

bool LatticeVector::is_zero() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](Int x) { return x == 0; });
}

LatticeVector LatticeVector::operator-() const
{
    LatticeVector out = *this;
    for (auto& x : out.entries_)
        x = -x;
    return out;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other)
{
    require_same_length(*this, other, "add");
    for (std::size_t i = 0; i < size(); ++i)
        entries_[i] += other.entries_[i];
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other)
{
    require_same_length(*this, other, "subtract");
    for (std::size_t i = 0; i < size(); ++i)
        entries_[i] -= other.entries_[i];
    return *this;
}

LatticeVector operator*(Int k, const LatticeVector& v)
{
    LatticeVector out = v;
    for (auto& x : out.entries_)
        x *= k;
    return out;
}

std::string to_string(const LatticeVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (i)
            out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

Int pair(const DualWeight& alpha, const LatticeVector& xi)
{
    require_same_length(alpha, xi, "pair");
    Int s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        s += alpha[i] * xi[i];
    return s;
}

Rational pair(const RationalVector& position, const LatticeVector& xi)
{
    if (position.size() != xi.size())
        throw DimensionError("pair: position of length " + std::to_string(position.size())
                             + " against direction of length " + std::to_string(xi.size()));
    Rational s = 0;
    for (std::size_t i = 0; i < xi.size(); ++i)
        s += position[i] * xi[i];
    return s;
}

LatticeVector primitive(const LatticeVector& v)
{
    Int g = gcd_of(v);
    if (g == 0)
        throw ZeroVectorError("primitive: zero vector");
    std::vector<Int> out(v.begin(), v.end());
    for (auto& x : out)
        x /= g;
    return LatticeVector(std::move(out));
}

bool is_primitive(const LatticeVector& v) { return gcd_of(v) == 1; }

LatticeVector primitive_direction(const RationalVector& v)
{
    BigInt lcm = 1;
    for (const auto& q : v)
    {
        BigInt den = boost::multiprecision::denominator(q);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    BigInt g = 0;
    std::vector<BigInt> scaled;
    scaled.reserve(v.size());
    for (const auto& q : v)
    {
        BigInt z = boost::multiprecision::numerator(q) * (lcm / boost::multiprecision::denominator(q));
        g = boost::multiprecision::gcd(g, z);
        scaled.push_back(z);
    }
    if (g == 0)
        throw ZeroVectorError("primitive_direction: zero vector");
    std::vector<Int> out;
    out.reserve(v.size());
    for (const auto& z : scaled)
        out.push_back(to_int(BigInt(z / g)));
    return LatticeVector(std::move(out));
}

bool parallel(const LatticeVector& a, const LatticeVector& b)
{
    require_same_length(a, b, "parallel");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (BigInt(a[i]) * b[j] != BigInt(a[j]) * b[i])
                return false;
    return true;
}

std::optional<Rational> ratio(const LatticeVector& b, const LatticeVector& a)
{
    require_same_length(a, b, "ratio");
    if (a.is_zero())
        throw ZeroVectorError("ratio: zero denominator vector");
    if (!parallel(a, b))
        return std::nullopt;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            return fraction(b[i], a[i]);
    return std::nullopt;
}

bool same_line(const LatticeVector& a, const LatticeVector& b)
{
    if (a.is_zero() || b.is_zero())
        return false;
    LatticeVector pa = primitive(a), pb = primitive(b);
    return pa == pb || pa == -pb;
}

bool is_generic(const LatticeVector& xi, std::span<const DualWeight> weights)
{
    return std::all_of(weights.begin(), weights.end(), [&](const DualWeight& w) { return pair(w, xi) != 0; });
}

namespace {

bool advance(std::vector<Int>& v, Int s)
{
    for (std::size_t i = v.size(); i-- > 0;)
    {
        if (v[i] < s)
        {
            ++v[i];
            std::fill(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end(), -s);
            return true;
        }
    }
    return false;
}

// Calls visit on candidates in enumeration order until it returns true.
template <typename Visit>
void enumerate_shells(std::size_t rank, Visit&& visit)
{
    if (rank == 0)
    {
        visit(LatticeVector{});
        return;
    }
    for (Int s = 1;; ++s)
    {
        std::vector<Int> v(rank, -s);
        do
        {
            Int sup = 0;
            for (Int x : v)
                sup = std::max(sup, x < 0 ? -x : x);
            auto first = std::find_if(v.begin(), v.end(), [](Int x) { return x != 0; });
            if (sup == s && first != v.end() && *first > 0)
            {
                LatticeVector cand(v);
                if (is_primitive(cand) && visit(cand))
                    return;
            }
        } while (advance(v, s));
    }
}

} // namespace

std::vector<LatticeVector> generic_directions(std::span<const DualWeight> weights, std::size_t rank,
                                              std::size_t count)
{
    for (const auto& w : weights)
    {
        if (w.size() != rank)
            throw DimensionError("find_generic: weight " + to_string(w) + " in rank-" + std::to_string(rank)
                                 + " lattice");
        if (w.is_zero())
            throw ZeroVectorError("find_generic: zero weight");
    }
    std::vector<LatticeVector> found;
    if (count == 0)
        return found;
    if (rank == 1)
    {
        // a single primitive direction; continue with -1, 2, -2, ... which give the same circle
        for (Int k = 1; found.size() < count; ++k)
        {
            found.push_back(LatticeVector{k});
            if (found.size() < count)
                found.push_back(LatticeVector{-k});
        }
        return found;
    }
    enumerate_shells(rank, [&](const LatticeVector& cand) {
        if (is_generic(cand, weights))
            found.push_back(cand);
        return found.size() >= count || rank == 0;
    });
    return found;
}

LatticeVector find_generic(std::span<const DualWeight> weights, std::size_t rank)
{
    return generic_directions(weights, rank, 1).front();
}

ExtendedGcd extended_gcd(Int a, Int b)
{
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0)
    {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

IntMatrix::IntMatrix(const std::vector<std::vector<Int>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows)
    {
        if (r.size() != cols_)
            throw DimensionError("ragged integer matrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::span<const LatticeVector> columns, std::size_t rows)
{
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
    {
        if (columns[c].size() != rows)
            throw DimensionError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

LatticeVector IntMatrix::row(std::size_t r) const
{
    return LatticeVector(std::vector<Int>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

LatticeVector IntMatrix::column(std::size_t c) const
{
    std::vector<Int> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return LatticeVector(std::move(out));
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

LatticeVector IntMatrix::operator*(const LatticeVector& v) const
{
    if (v.size() != cols_)
        throw DimensionError("matrix-vector product: " + std::to_string(cols_) + " columns, vector of length "
                             + std::to_string(v.size()));
    std::vector<Int> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += (*this)(r, c) * v[c];
    return LatticeVector(std::move(out));
}

RationalVector IntMatrix::operator*(const RationalVector& v) const
{
    if (v.size() != cols_)
        throw DimensionError("matrix-vector product: " + std::to_string(cols_) + " columns, vector of length "
                             + std::to_string(v.size()));
    RationalVector out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += v[c] * (*this)(r, c);
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += a(i, k) * b(k, j);
    return out;
}

BigInt IntMatrix::determinant() const
{
    if (rows_ != cols_)
        throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination
    std::vector<BigRow> a(n, BigRow(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a[r][c] = (*this)(r, c);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (a[k][k] == 0)
        {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::string to_string(const IntMatrix& m)
{
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < m.rows(); ++r)
    {
        if (r)
            out << ";";
        for (std::size_t c = 0; c < m.cols(); ++c)
            out << (c ? "," : "") << m(r, c);
    }
    out << "]";
    return out.str();
}

UnimodularMap::UnimodularMap(IntMatrix matrix) : matrix_(std::move(matrix))
{
    BigInt det = matrix_.determinant();
    if (det != 1 && det != -1)
        throw InvalidDataError("not unimodular: determinant " + det.str() + " of " + to_string(matrix_));
    det_ = det == 1 ? 1 : -1;

    // Gauss-Jordan over Q; the inverse is integral because |det| = 1
    const std::size_t n = matrix_.rows();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (std::size_t r = 0; r < n; ++r)
    {
        for (std::size_t c = 0; c < n; ++c)
            aug[r][c] = matrix_(r, c);
        aug[r][n + r] = 1;
    }
    for (std::size_t c = 0; c < n; ++c)
    {
        std::size_t p = c;
        while (aug[p][c] == 0)
            ++p;
        std::swap(aug[p], aug[c]);
        Rational inv = 1 / aug[c][c];
        for (auto& x : aug[c])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r)
        {
            if (r == c || aug[r][c] == 0)
                continue;
            Rational f = aug[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                aug[r][j] -= f * aug[c][j];
        }
    }
    inverse_ = IntMatrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inverse_(r, c) = to_int(boost::multiprecision::numerator(aug[r][n + c]));
}

UnimodularMap complete_to_unimodular(const LatticeVector& v)
{
    if (v.size() != 2)
        throw DimensionError("complete_to_unimodular: rank-2 vector required, got " + to_string(v));
    if (!is_primitive(v))
        throw NotPrimitiveError("complete_to_unimodular: " + to_string(v) + " is not primitive");
    ExtendedGcd e = extended_gcd(v[0], v[1]);
    // rows (b, -a) and (x, y): determinant b*y + a*x = 1
    return UnimodularMap(IntMatrix({{v[1], -v[0]}, {e.x, e.y}}));
}

std::size_t rank(std::span<const LatticeVector> vectors, std::size_t dim)
{
    auto rows = to_big_rows(vectors, dim);
    return hermite_rows(rows, dim);
}

BigInt span_index(std::span<const LatticeVector> vectors, std::size_t dim)
{
    auto rows = to_big_rows(vectors, dim);
    std::size_t r = hermite_rows(rows, dim);
    if (r < dim)
        return 0;
    BigInt index = 1;
    for (std::size_t i = 0; i < dim; ++i)
        index *= rows[i][i];
    return index;
}

std::vector<LatticeVector> saturated_kernel(std::span<const LatticeVector> rows_in, std::size_t dim)
{
    const std::size_t k = rows_in.size();
    auto rows = to_big_rows(rows_in, dim);
    // [A^T | I]: zero rows of the left block carry kernel vectors on the right
    std::vector<BigRow> aug(dim, BigRow(k + dim, 0));
    for (std::size_t i = 0; i < dim; ++i)
    {
        for (std::size_t j = 0; j < k; ++j)
            aug[i][j] = rows[j][i];
        aug[i][k + i] = 1;
    }
    std::size_t r = hermite_rows(aug, k);

    std::vector<BigRow> kernel;
    for (std::size_t i = r; i < dim; ++i)
        kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(k), aug[i].end());
    std::size_t kr = hermite_rows(kernel, dim);

    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < kr; ++i)
    {
        std::vector<Int> entries;
        entries.reserve(dim);
        for (const auto& z : kernel[i])
            entries.push_back(to_int(z));
        out.emplace_back(std::move(entries));
    }
    return out;
}

} // namespace oneskel
