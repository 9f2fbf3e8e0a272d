#pragma once

#include <optional>
#include <vector>

#include "affsg/matrix.hpp"

namespace affsg {

struct HnfResult {
  IntMatrix h;  // canonical row HNF, same shape as the input, zero rows at the bottom
  IntMatrix u;  // unimodular, u * m == h
};

// Canonical row Hermite normal form: pivots positive, entries above each
// pivot reduced into [0, pivot), pivot columns strictly increasing.
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  IntMatrix d;     // diagonal, d1 | d2 | ... | dk > 0, rest zero
  IntMatrix u;     // unimodular, u * m * v == d
  IntMatrix v;     // unimodular
  IntMatrix vinv;  // v^{-1}, maintained alongside v
};

// Smith normal form by elementary reduction, pivots chosen by minimal
// absolute value.
SnfResult snf(const IntMatrix& m);

// Rows u with u * m == 0; the returned rows are a basis of the left kernel.
IntMatrix left_kernel(const IntMatrix& m);

// A subgroup of Z^d held by its canonical HNF basis (zero rows dropped).
// Two lattices are the same subgroup iff their stored bases are equal.
class IntegerLattice {
 public:
  IntegerLattice() : dim_(0), basis_(0, 0) {}
  IntegerLattice(int ambient_dim, IntMatrix canonical_basis)
      : dim_(ambient_dim), basis_(std::move(canonical_basis)) {}

  int ambient_dim() const { return dim_; }
  int rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool operator==(const IntegerLattice&) const = default;

  std::string to_string() const;

 private:
  int dim_;
  IntMatrix basis_;
};

IntegerLattice lattice_from_rows(int ambient_dim, const std::vector<VecInt>& rows);
IntegerLattice zero_lattice(int ambient_dim);

// Coordinates of x with respect to the basis (back-substitution against
// the HNF pivots); nullopt when x is not in the lattice.
std::optional<VecInt> lattice_coordinates(const IntegerLattice& l, const VecInt& x);

bool lattice_member(const IntegerLattice& l, const VecInt& x);

bool lattice_contains(const IntegerLattice& outer, const IntegerLattice& inner);

// {x : x in l1 and x in l2}, via the kernel of the stacked bases.
IntegerLattice lattice_intersect(const IntegerLattice& l1, const IntegerLattice& l2);

// Direct sum placed block-wise in Z^{d1+d2}.
IntegerLattice lattice_direct_sum(const IntegerLattice& l1, const IntegerLattice& l2);

// {x in ambient : n*x in l for some n > 0}. Precondition: l contained in
// ambient (checked).
IntegerLattice saturation(const IntegerLattice& ambient, const IntegerLattice& l);

// ambient/l decomposed as Z^free_rank (+) sum of Z/torsion_invariants[i].
// `projection` maps ambient-basis coordinates (length = ambient rank) onto
// the free part Z^free_rank; it is onto, and kills exactly sat(l).
struct QuotientStructure {
  int free_rank = 0;
  std::vector<Int> torsion_invariants;  // each >= 2, divisibility chain
  IntMatrix projection;                 // free_rank x ambient_rank
};

QuotientStructure quotient_structure(const IntegerLattice& ambient,
                                     const IntegerLattice& l);

// Free-part coordinates of x in ambient; throws when x is not a member.
VecInt quotient_project(const QuotientStructure& q, const IntegerLattice& ambient,
                        const VecInt& x);

}  // namespace affsg
