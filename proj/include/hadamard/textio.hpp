#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hadamard/family.hpp"
#include "hadamard/plug.hpp"

// The two text formats the CLI reads and writes. Both are line-oriented,
// human-auditable, and diff-able against published listings.
//
// FamilyFile:
//   # comment and blank lines are ignored
//   v=69 lambda=57
//   X0[skew]: 1 2 6 7 ...
//   X1[sym]: 1 4 5 ...
//   X2: 0 1 3 ...
// A block line may instead carry an orbit-compressed form, expanded at
// parse time:
//   X0[skew]: orbit H=1,2,4,8,16,32,37,55,64 reps=5,9,11,25
// Blocks must be numbered consecutively from X0. The serializer always
// writes expanded elements, so parse -> serialize -> parse is the identity.
//
// MatrixFile:
//   order=276
//   +-+...   (n rows of exactly n characters from {+,-})

namespace hadamard {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

DifferenceFamily parse_family(std::istream& in);
DifferenceFamily parse_family_string(const std::string& text);
std::string serialize_family(const DifferenceFamily& f);

SquareSignMatrix parse_matrix(std::istream& in);
std::string serialize_matrix(const SquareSignMatrix& m);

}  // namespace hadamard
