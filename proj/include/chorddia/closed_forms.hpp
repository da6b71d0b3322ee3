#pragma once

#include <cstdint>

#include "chorddia/arithmetic.hpp"

namespace chorddia {

enum class SymmetryKind { cyclic, dihedral };

/// (2n-1)!! / (2n) or (2n-1)!! / (4n), kept as an unreduced fraction.
struct AsymptoticBound {
    SymmetryKind kind;
    unsigned n;
    BigCount numerator;
    BigCount denominator;
    BigCount exact_floor;

    BigRational value() const { return BigRational(numerator, denominator); }
};

// Diagrams fixed by a rotation of order i, i | 2n.
BigCount nu(unsigned n, std::uint64_t i);

// Elements of S_n wr S_2 of cycle type i^{2n/i}.
BigCount psi(unsigned n, std::uint64_t i);

// Elements of S_n wr S_2 of cycle type 1^2 2^{n-1}.
BigCount psi_reflection(unsigned n);

// sum_{k <= n/2} n! / (k! (n-2k)!); kappa(0) = 1.
BigCount kappa(unsigned n);

// Diagrams up to rotation.
BigCount cyclic_count(unsigned n);

// Diagrams up to rotation and reflection.
BigCount dihedral_count(unsigned n);

// Diagrams with no symmetry at all: (2n-1)!!.
BigCount identity_count(unsigned n);

AsymptoticBound asymptotic_lower(SymmetryKind kind, unsigned n);

} // namespace chorddia
