#include "hadamard/plug.hpp"

#include <stdexcept>
#include <string>

#include "hadamard/bits.hpp"

namespace hadamard {

SquareSignMatrix::SquareSignMatrix(int n, int fill) : n_(n) {
    if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
    if (fill != 1 && fill != -1) throw std::invalid_argument("entries must be +1 or -1");
    entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                    static_cast<std::int8_t>(fill));
}

void SquareSignMatrix::set(int r, int c, int value) {
    if (value != 1 && value != -1) throw std::invalid_argument("entries must be +1 or -1");
    entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
             static_cast<std::size_t>(c)] = static_cast<std::int8_t>(value);
}

BackDiagonal back_diagonal(Modulus v) { return BackDiagonal(v); }

SquareSignMatrix circulant_matrix(const SignRow& r) {
    const int v = r.v();
    SquareSignMatrix out(v);
    for (int j = 0; j < v; ++j) {
        for (int c = 0; c < v; ++c) {
            int idx = c - j;
            if (idx < 0) idx += v;
            out.set(j, c, r.sign(idx));
        }
    }
    return out;
}

namespace {

enum class BlockForm { plain, a_r, r_a };  // A, AR, RA

struct Cell {
    int sign;
    int row_index;  // which of the four first rows
    BlockForm form;
};

// Entry (j, c) of each v x v block as a lookup into the defining first row:
//   A    : a[(c - j) mod v]
//   A R  : a[(v-1-c - j) mod v]
//   R A  : a[(c + j + 1) mod v]
int cell_entry(const SignRow& row, BlockForm form, int j, int c) {
    const int v = row.v();
    int idx = 0;
    switch (form) {
        case BlockForm::plain: idx = c - j; break;
        case BlockForm::a_r: idx = v - 1 - c - j; break;
        case BlockForm::r_a: idx = c + j + 1; break;
    }
    idx %= v;
    if (idx < 0) idx += v;
    return row.sign(idx);
}

using ArrayLayout = std::array<std::array<Cell, 4>, 4>;

constexpr ArrayLayout kGoethalsSeidel{{
    {{{+1, 0, BlockForm::plain}, {+1, 1, BlockForm::a_r}, {+1, 2, BlockForm::a_r}, {+1, 3, BlockForm::a_r}}},
    {{{-1, 1, BlockForm::a_r}, {+1, 0, BlockForm::plain}, {-1, 3, BlockForm::r_a}, {+1, 2, BlockForm::r_a}}},
    {{{-1, 2, BlockForm::a_r}, {+1, 3, BlockForm::r_a}, {+1, 0, BlockForm::plain}, {-1, 1, BlockForm::r_a}}},
    {{{-1, 3, BlockForm::a_r}, {-1, 2, BlockForm::r_a}, {+1, 1, BlockForm::r_a}, {+1, 0, BlockForm::plain}}},
}};

constexpr ArrayLayout kPropus{{
    {{{-1, 0, BlockForm::plain}, {+1, 1, BlockForm::a_r}, {+1, 2, BlockForm::a_r}, {+1, 3, BlockForm::a_r}}},
    {{{+1, 2, BlockForm::a_r}, {+1, 3, BlockForm::r_a}, {+1, 0, BlockForm::plain}, {-1, 1, BlockForm::r_a}}},
    {{{+1, 1, BlockForm::a_r}, {+1, 0, BlockForm::plain}, {-1, 3, BlockForm::r_a}, {+1, 2, BlockForm::r_a}}},
    {{{+1, 3, BlockForm::a_r}, {-1, 2, BlockForm::r_a}, {+1, 1, BlockForm::r_a}, {+1, 0, BlockForm::plain}}},
}};

SquareSignMatrix assemble(const ArrayLayout& layout, const std::array<SignRow, 4>& rows) {
    const Modulus v = rows[0].modulus();
    for (const SignRow& r : rows) {
        if (r.modulus() != v)
            throw std::invalid_argument("all four rows must share one modulus");
    }
    const int n = 4 * v.value();
    SquareSignMatrix out(n);
    for (int br = 0; br < 4; ++br) {
        for (int bc = 0; bc < 4; ++bc) {
            const Cell& cell = layout[static_cast<std::size_t>(br)][static_cast<std::size_t>(bc)];
            const SignRow& row = rows[static_cast<std::size_t>(cell.row_index)];
            for (int j = 0; j < v.value(); ++j) {
                for (int c = 0; c < v.value(); ++c) {
                    out.set(br * v.value() + j, bc * v.value() + c,
                            cell.sign * cell_entry(row, cell.form, j, c));
                }
            }
        }
    }
    return out;
}

}  // namespace

SquareSignMatrix build_gs(const std::array<SignRow, 4>& rows) {
    return assemble(kGoethalsSeidel, rows);
}

SquareSignMatrix build_propus(const std::array<SignRow, 4>& rows) {
    if (!(rows[1] == rows[2]))
        throw std::invalid_argument("propus array requires rows[1] = rows[2]");
    return assemble(kPropus, rows);
}

SquareSignMatrix build_array(ArrayKind kind, const std::array<SignRow, 4>& rows) {
    return kind == ArrayKind::goethals_seidel ? build_gs(rows) : build_propus(rows);
}

bool is_hadamard(const SquareSignMatrix& m) {
    const int n = m.order();
    if (n == 1) return true;
    if (n % 2 != 0) return false;

    // Row i . row j = n - 2 * (number of disagreeing positions); packing the
    // rows lets the popcount kernels do the pairwise products.
    std::vector<BitVec> packed;
    packed.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        BitVec row(n);
        for (int c = 0; c < n; ++c) {
            if (m.at(i, c) < 0) row.set(c);
        }
        packed.push_back(std::move(row));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (xor_count(packed[static_cast<std::size_t>(i)],
                          packed[static_cast<std::size_t>(j)]) != n / 2)
                return false;
        }
    }
    return true;
}

bool is_skew_hadamard(const SquareSignMatrix& m) {
    const int n = m.order();
    for (int i = 0; i < n; ++i) {
        if (m.at(i, i) != 1) return false;
        for (int j = i + 1; j < n; ++j) {
            if (m.at(i, j) + m.at(j, i) != 0) return false;
        }
    }
    return is_hadamard(m);
}

bool is_symmetric_matrix(const SquareSignMatrix& m) {
    const int n = m.order();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (m.at(i, j) != m.at(j, i)) return false;
        }
    }
    return true;
}

}  // namespace hadamard
