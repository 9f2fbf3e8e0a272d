#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "affsg/semigroup.hpp"

namespace affsg {

// A homomorphism of affine semigroups, carried by the rational matrix it
// induces on groups of differences. Images of generators must be integral
// members of the target.
struct MonoidHom {
  AffineSemigroup source;
  AffineSemigroup target;
  RatMatrix matrix;  // target_dim x source_dim

  VecInt apply(const VecInt& x) const;
};

MonoidHom make_hom(AffineSemigroup source, AffineSemigroup target, RatMatrix matrix,
                   const std::optional<Int>& bound = std::nullopt);

// Inclusion of sub into sup living in the same coordinates.
MonoidHom inclusion_hom(const AffineSemigroup& sub, const AffineSemigroup& sup,
                        const std::optional<Int>& bound = std::nullopt);

// Canonical presentation of the torsion-free fibered sum: its generators
// are the projected images of the S1- and S2-generators, canonicalized by
// a unimodular change of basis of Z^k so equal presentations print
// identically.
struct TildePresentation {
  AffineSemigroup semigroup;      // in Z^free_rank
  std::vector<VecInt> images1;    // per S1-generator
  std::vector<VecInt> images2;    // per S2-generator
  IntMatrix to_tilde;             // free_rank x ambient_rank, acts on ambient coordinates
};

// All derived data of a fibered sum S1 <- S -> S2: the relation lattice
// rel = <(h1(g), -h2(g))> inside ambient = gp(S1) (+) gp(S2), its
// saturation, the quotient structure, and the tilde presentation.
// Immutable after construction.
class FiberedSumContext {
 public:
  static FiberedSumContext create(AffineSemigroup s1, AffineSemigroup s2,
                                  AffineSemigroup s, MonoidHom h1, MonoidHom h2);

  const AffineSemigroup& s1() const { return s1_; }
  const AffineSemigroup& s2() const { return s2_; }
  const AffineSemigroup& base() const { return s_; }
  const MonoidHom& h1() const { return h1_; }
  const MonoidHom& h2() const { return h2_; }
  const IntegerLattice& rel() const { return rel_; }
  const IntegerLattice& ambient() const { return ambient_; }
  const IntegerLattice& sat_rel() const { return satrel_; }
  const QuotientStructure& quot() const { return quot_; }
  const TildePresentation& tilde() const { return tilde_; }

  // Image of (a, b) in the tilde presentation's coordinates.
  VecInt tilde_image(const VecInt& a, const VecInt& b) const;

 private:
  FiberedSumContext() = default;
  AffineSemigroup s1_, s2_, s_;
  MonoidHom h1_, h2_;
  IntegerLattice rel_, ambient_, satrel_;
  QuotientStructure quot_;
  TildePresentation tilde_;
};

// An element a (+) b of the fibered sum; memberships are verified on
// construction.
struct FibElement {
  const FiberedSumContext* ctx = nullptr;
  VecInt a, b;
};

FibElement make_element(const FiberedSumContext& ctx, VecInt a, VecInt b,
                        const std::optional<Int>& bound = std::nullopt);

// Equality in the cancellative fibered sum: difference in rel.
bool eq_cancellative(const FibElement& x, const FibElement& y);

// Equality in the torsion-free fibered sum: difference in sat(rel).
bool eq_torsionfree(const FibElement& x, const FibElement& y);

// sat(rel) == rel, i.e. the cancellative fibered sum is already an affine
// semigroup.
bool is_torsion_free(const FiberedSumContext& ctx);

// gp(S1) /\ gp(S2) == gp(S) for subsemigroups of a common Z^d with
// S inside S1 /\ S2 (containment verified on generators).
bool gp_condition(const AffineSemigroup& s1, const AffineSemigroup& s2,
                  const AffineSemigroup& s,
                  const std::optional<Int>& bound = std::nullopt);

// The same condition evaluated on the images inside the tilde
// presentation; equivalent to is_torsion_free.
bool gp_condition_in_tilde(const FiberedSumContext& ctx);

struct CompareWitness {
  VecInt x1, x2;  // first pair (element of S1, element of S2)
  VecInt y1, y2;  // second pair
  VecInt embedded_sum;
};

struct CompareVerdict {
  bool isomorphic = false;
  // which criterion decided: "equal-ranks", "lattice-intersection",
  // "induced-map" (exact fallback), or "kernel-witness"
  std::string rule;
  std::optional<CompareWitness> witness;
  RatMatrix induced;  // free_rank x t_dim map induced on the tilde free part
  int tilde_rank = 0;
  int sum_rank = 0;
};

// Compares the torsion-free fibered sum with S1+S2 taken inside Z^t_dim
// via embeddings e1, e2 (t_dim x d_i rational matrices, integral on
// generators, agreeing on S). The canonical map tilde -> Z^t is an
// isomorphism onto S1+S2 iff the induced linear map is injective; when it
// is not, a witness pair equal in the sum but distinct in the fibered sum
// is produced (bounded search first, constructive kernel split otherwise).
CompareVerdict compare_with_sum(const FiberedSumContext& ctx, int t_dim,
                                const RatMatrix& e1, const RatMatrix& e2,
                                const Int& search_bound = 12);

// Unique factoring of a hom pair through the tilde presentation: given
// target values (rows in Z^t) for every generator of S1 and S2, returns
// the (necessarily unique) integer matrix L with image(gen) * L = value
// for all generators, or nullopt when no factoring exists.
std::optional<IntMatrix> factor_hom(const FiberedSumContext& ctx,
                                    const std::vector<VecInt>& values1,
                                    const std::vector<VecInt>& values2, int t_dim);

}  // namespace affsg
