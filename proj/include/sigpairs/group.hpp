/*
   Copyright 2026 The sigpairs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SIGPAIRS_GROUP_HPP
#define SIGPAIRS_GROUP_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "sigpairs/cyclotomic.hpp"

namespace sigpairs {

/// 2x2 matrix over a cyclotomic field, row-major: [[e[0], e[1]], [e[2], e[3]]].
struct Matrix2 {
    std::array<Cyclotomic, 4> e;

    static Matrix2 identity(long order = 1);
    static Matrix2 diag(const Cyclotomic& a, const Cyclotomic& b);

    const Cyclotomic& operator()(int row, int col) const { return e[static_cast<std::size_t>(2 * row + col)]; }
    Cyclotomic& operator()(int row, int col) { return e[static_cast<std::size_t>(2 * row + col)]; }

    Matrix2 adjoint() const;
    Cyclotomic det() const;
    bool is_unitary() const;
    bool is_diagonal() const;
    /// lcm of the entry orders.
    long field_order() const;
    Matrix2 promote(long m) const;
    Matrix2 pow(long k) const;

    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend Matrix2 operator*(const Cyclotomic& c, const Matrix2& m);
    friend bool operator==(const Matrix2& a, const Matrix2& b) { return a.e == b.e; }
    friend bool operator!=(const Matrix2& a, const Matrix2& b) { return !(a == b); }

    std::size_t hash() const noexcept;
    std::string to_string() const;
};

/// Finite subgroup of U(2) stored as an explicit element list, identity first.
/// All entries share one cyclotomic order (field_order()).
class FiniteMatrixGroup {
   public:
    FiniteMatrixGroup(std::vector<Matrix2> elements, std::string label, long field_order);

    const std::vector<Matrix2>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::string& label() const noexcept { return label_; }
    long field_order() const noexcept { return field_order_; }
    bool contains(const Matrix2& m) const;

   private:
    std::vector<Matrix2> elements_;
    std::string label_;
    long field_order_;
};

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Breadth-first closure from the identity, multiplying on the right by the
/// generators in the given order. Throws NotUnitaryError or CapExceeded.
FiniteMatrixGroup closure(const std::vector<Matrix2>& generators, std::size_t cap = kDefaultClosureCap,
                          const std::string& label = "closure");

FiniteMatrixGroup cyclic_gamma(long p, long q);
FiniteMatrixGroup dihedral(long p);
FiniteMatrixGroup binary_dihedral(long p);

enum class Polyhedral { T, O, I };

/// Springer generators r, s, t for the tetrahedral/octahedral case (over
/// Q(zeta_8)) or the icosahedral case (over Q(zeta_10)).
struct SpringerGenerators {
    Matrix2 r, s, t;
};
SpringerGenerators springer_generators(Polyhedral kind);
/// Generating pair (a, b) used for the group.
std::array<Matrix2, 2> polyhedral_generators(Polyhedral kind);
FiniteMatrixGroup binary_polyhedral(Polyhedral kind);

/// Element-wise U g U^H. Throws NotUnitaryError(0) if U is not unitary.
FiniteMatrixGroup conjugate(const FiniteMatrixGroup& group, const Matrix2& u);

/// Parses "cyclic:p,q", "dihedral:p", "binary-dihedral:p", "T", "O", "I".
/// "file:path" loads a generator file (see json_io.hpp). Throws Error(Parse).
FiniteMatrixGroup group_from_spec(const std::string& spec);

}  // namespace sigpairs

template <>
struct std::hash<sigpairs::Matrix2> {
    std::size_t operator()(const sigpairs::Matrix2& m) const noexcept { return m.hash(); }
};

#endif
