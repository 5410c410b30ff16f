#ifndef ONESKEL_LATTICE_HPP
#define ONESKEL_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oneskel/rational.hpp"

namespace oneskel {

/**
 * An integer vector of length d (the torus rank). Depending on context it is
 * a circle direction in the lattice of the torus or a weight in the dual
 * lattice; the type does not distinguish the two roles.
 */
class LatticeVector
{
    public:
        LatticeVector() = default;
        explicit LatticeVector(std::vector<Int> entries) : entries_(std::move(entries)) {}
        LatticeVector(std::initializer_list<Int> entries) : entries_(entries) {}

        static LatticeVector zero(std::size_t rank) { return LatticeVector(std::vector<Int>(rank, 0)); }
        static LatticeVector unit(std::size_t rank, std::size_t i);

        std::size_t size() const noexcept { return entries_.size(); }
        Int operator[](std::size_t i) const { return entries_[i]; }
        Int& operator[](std::size_t i) { return entries_[i]; }
        const std::vector<Int>& entries() const noexcept { return entries_; }
        auto begin() const noexcept { return entries_.begin(); }
        auto end() const noexcept { return entries_.end(); }

        bool is_zero() const noexcept;

        LatticeVector operator-() const;
        LatticeVector& operator+=(const LatticeVector& other);
        LatticeVector& operator-=(const LatticeVector& other);

        friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
        friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
        friend LatticeVector operator*(Int k, const LatticeVector& v);

        friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
        friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

    private:
        std::vector<Int> entries_;
};

using DualWeight = LatticeVector;

std::string to_string(const LatticeVector& v);

/// The restriction of a weight to the circle generated by xi: <alpha, xi>.
Int pair(const DualWeight& alpha, const LatticeVector& xi);

/// <position, xi> for a rational point of the dual Lie algebra.
Rational pair(const RationalVector& position, const LatticeVector& xi);

/// v divided by the gcd of its entries. Throws ZeroVectorError on zero input.
LatticeVector primitive(const LatticeVector& v);

bool is_primitive(const LatticeVector& v);

/// Primitive integer vector positively proportional to a nonzero rational one.
LatticeVector primitive_direction(const RationalVector& v);

/// True iff a and b are linearly dependent over Q (zero counts as parallel).
bool parallel(const LatticeVector& a, const LatticeVector& b);

/// The rational t with b = t * a, if it exists. Requires a nonzero.
std::optional<Rational> ratio(const LatticeVector& b, const LatticeVector& a);

/// Same direction after `primitive`, up to sign.
bool same_line(const LatticeVector& a, const LatticeVector& b);

/// The circle generated by xi acts on every listed weight with nonzero weight.
bool is_generic(const LatticeVector& xi, std::span<const DualWeight> weights);

/**
 * First generic primitive direction in the fixed enumeration order: sup-norm
 * shells 1, 2, ...; inside a shell lexicographic order; only vectors whose
 * first nonzero entry is positive. Weights must all be nonzero.
 */
LatticeVector find_generic(std::span<const DualWeight> weights, std::size_t rank);

/// The first `count` generic directions of the same enumeration. Rank 1 has
/// only one primitive direction, so there the list is 1, -1, 2, -2, ...
std::vector<LatticeVector> generic_directions(std::span<const DualWeight> weights, std::size_t rank,
                                              std::size_t count);

struct ExtendedGcd
{
    Int g; ///< non-negative
    Int x;
    Int y; ///< x*a + y*b == g
};

ExtendedGcd extended_gcd(Int a, Int b);

/// Dense integer matrix, row major.
class IntMatrix
{
    public:
        IntMatrix() = default;
        IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
        explicit IntMatrix(const std::vector<std::vector<Int>>& rows);
        IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
            : IntMatrix(std::vector<std::vector<Int>>(rows.begin(), rows.end()))
        {
        }

        static IntMatrix identity(std::size_t n);
        static IntMatrix from_columns(std::span<const LatticeVector> columns, std::size_t rows);

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }
        Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
        Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

        LatticeVector row(std::size_t r) const;
        LatticeVector column(std::size_t c) const;
        IntMatrix transpose() const;

        LatticeVector operator*(const LatticeVector& v) const;
        RationalVector operator*(const RationalVector& v) const;
        friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

        BigInt determinant() const;

        friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<Int> data_;
};

std::string to_string(const IntMatrix& m);

/// A square integer matrix with determinant +1 or -1.
class UnimodularMap
{
    public:
        explicit UnimodularMap(IntMatrix matrix);

        const IntMatrix& matrix() const noexcept { return matrix_; }
        const IntMatrix& inverse() const noexcept { return inverse_; }
        int determinant() const noexcept { return det_; }

        /// Action on the torus lattice (circle directions).
        LatticeVector apply(const LatticeVector& xi) const { return matrix_ * xi; }
        /// Contragredient action on the dual side, preserving <x, xi>.
        LatticeVector apply_dual(const DualWeight& alpha) const { return inverse_.transpose() * alpha; }
        RationalVector apply_dual(const RationalVector& x) const { return inverse_.transpose() * x; }

    private:
        IntMatrix matrix_;
        IntMatrix inverse_;
        int det_ = 1;
};

/**
 * For a primitive rank-2 vector v = (a, b), the map with rows (b, -a) and
 * (x, y) where x*a + y*b = 1 comes from extended Euclid. It sends v to (0, 1)
 * and has determinant +1. Throws NotPrimitiveError otherwise.
 */
UnimodularMap complete_to_unimodular(const LatticeVector& v);

/// Rank over Q of the given vectors, all of length `dim`.
std::size_t rank(std::span<const LatticeVector> vectors, std::size_t dim);

/// Index of the Z-span of `vectors` in Z^dim; zero when the rank is below dim.
BigInt span_index(std::span<const LatticeVector> vectors, std::size_t dim);

/**
 * Integer basis of {xi in Z^dim : <r, xi> = 0 for every r in rows}. The basis
 * is saturated (it spans the full kernel lattice) and returned in row Hermite
 * form with positive pivots.
 */
std::vector<LatticeVector> saturated_kernel(std::span<const LatticeVector> rows, std::size_t dim);

} // namespace oneskel

#endif
