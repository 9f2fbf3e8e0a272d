#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affsg/lattice.hpp"

namespace affsg {

// A finitely generated submonoid of Z^d, held by its generator list
// (zero vectors dropped, duplicates removed, insertion order kept).
// Positivity and its certificate are established eagerly at construction
// and never change, so values are immutable and freely shareable.
class AffineSemigroup {
 public:
  AffineSemigroup() : dim_(0) {}
  AffineSemigroup(int ambient_dim, std::vector<VecInt> generators);

  int ambient_dim() const { return dim_; }
  const std::vector<VecInt>& generators() const { return gens_; }
  bool trivial() const { return gens_.empty(); }

  bool positive() const { return grading_.has_value(); }
  // strictly positive grading functional: grading . g >= 1 for every generator
  const VecRat& grading() const;
  // natural-coefficient combination of the generators summing to zero
  // (only when not positive)
  const std::vector<Int>& nonpositivity_witness() const;

  bool operator==(const AffineSemigroup&) const;

  std::string to_string() const;

 private:
  int dim_;
  std::vector<VecInt> gens_;
  std::optional<VecRat> grading_;
  std::optional<std::vector<Int>> witness_;
};

struct MembershipDecision {
  enum class Verdict { Yes, No, Unknown };
  Verdict verdict = Verdict::No;
  std::vector<Int> coefficients;  // per generator, Yes only
  Int search_bound = 0;           // Unknown only

  bool yes() const { return verdict == Verdict::Yes; }
};

struct PositivityResult {
  bool positive = false;
  VecRat functional;                 // when positive
  std::vector<Int> zero_combination;  // when not
};

// Group of differences gp(S), as the lattice generated by the generators.
IntegerLattice gp(const AffineSemigroup& s);

int semigroup_rank(const AffineSemigroup& s);

PositivityResult is_positive(const AffineSemigroup& s);

// Decides x in S. Positive semigroups use an exhaustive graded search and
// never answer Unknown. Non-positive ones need `bound` (a cap on the total
// coefficient sum); x outside gp(S) is still a provable No. Ties between
// coefficient solutions go to the lexicographically smallest tuple in the
// stored generator order.
MembershipDecision member(const AffineSemigroup& s, const VecInt& x,
                          const std::optional<Int>& bound = std::nullopt);

AffineSemigroup sum(const AffineSemigroup& s1, const AffineSemigroup& s2);

AffineSemigroup scale(const AffineSemigroup& s, const Int& a);

// Semigroup generated by {A*g}; images must be integral.
AffineSemigroup transform(const AffineSemigroup& s, const RatMatrix& a);

bool equal_as_submonoids(const AffineSemigroup& s1, const AffineSemigroup& s2,
                         const std::optional<Int>& bound = std::nullopt);

bool is_numerical(const AffineSemigroup& s);

// Embeddable in N: rank <= 1 and positive ({0} counts).
bool embeds_in_numerical(const AffineSemigroup& s);

Int gcd_numerical(const AffineSemigroup& s);

AffineSemigroup intersect_numerical(const AffineSemigroup& s1,
                                    const AffineSemigroup& s2);

// Minimal generating set of a numerical semigroup, ascending.
std::vector<Int> minimal_generators_numerical(const AffineSemigroup& s);

// All distinct elements with total generator-coefficient sum <= bound,
// sorted lexicographically.
std::vector<VecInt> enumerate_by_coeff_sum(const AffineSemigroup& s, const Int& bound);

// All distinct elements v with lambda(v) <= bound for a functional with
// lambda(g) >= 1 on every generator (complete up to that degree), sorted
// lexicographically.
std::vector<VecInt> enumerate_by_degree(const AffineSemigroup& s, const VecRat& lambda,
                                        const Rat& bound);

}  // namespace affsg
