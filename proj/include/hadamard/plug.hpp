#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hadamard/circulant.hpp"

// Plugging four circulant first rows into the Goethals-Seidel or propus
// array, plus exact verification of the Hadamard, skew and symmetric
// conditions on the assembled matrix.

namespace hadamard {

enum class ArrayKind { goethals_seidel, propus };

class SquareSignMatrix {
public:
    explicit SquareSignMatrix(int n, int fill = +1);

    int order() const { return n_; }

    int at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
                        static_cast<std::size_t>(c)];
    }

    void set(int r, int c, int value);

    friend bool operator==(const SquareSignMatrix& a, const SquareSignMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    int n_;
    std::vector<std::int8_t> entries_;
};

// The back-diagonal identity (rows of I in reverse order), kept as the
// permutation i -> n-1-i; the array assemblers use it as an index remap,
// never as a dense product.
class BackDiagonal {
public:
    explicit BackDiagonal(Modulus v) : n_(v.value()) {}
    int order() const { return n_; }
    int image(int i) const { return n_ - 1 - i; }  // column of the 1 in row i

private:
    int n_;
};

BackDiagonal back_diagonal(Modulus v);

// Row j is the first row shifted cyclically right by j.
SquareSignMatrix circulant_matrix(const SignRow& r);

// The 4v x 4v Goethals-Seidel plug-in of the four circulants.
SquareSignMatrix build_gs(const std::array<SignRow, 4>& rows);

// The propus variant; requires rows[1] = rows[2] (the symmetric-output
// contract) and rejects anything else.
SquareSignMatrix build_propus(const std::array<SignRow, 4>& rows);

SquareSignMatrix build_array(ArrayKind kind, const std::array<SignRow, 4>& rows);

// M Mt = n I, checked in exact integers with early exit.
bool is_hadamard(const SquareSignMatrix& m);

// Hadamard and M + Mt = 2I.
bool is_skew_hadamard(const SquareSignMatrix& m);

bool is_symmetric_matrix(const SquareSignMatrix& m);

}  // namespace hadamard
