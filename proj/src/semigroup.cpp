#include "affsg/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace affsg {

namespace {

// --- exact Fourier-Motzkin feasibility for  lambda . g >= 1  ---

struct FmConstraint {
  VecRat coeffs;  // on the lambda variables
  Rat rhs;
  VecRat mult;  // provenance: nonnegative combination of the original rows
};

struct FmOutcome {
  bool feasible = false;
  VecRat functional;
  std::vector<Int> certificate;  // natural combination of generators summing to 0
};

FmOutcome fourier_motzkin(const std::vector<VecInt>& gens, int dim) {
  FmOutcome out;
  size_t n = gens.size();
  std::vector<FmConstraint> cs;
  cs.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    FmConstraint c;
    c.coeffs.assign(static_cast<size_t>(dim), Rat(0));
    for (int i = 0; i < dim; ++i) c.coeffs[i] = Rat(gens[j][i]);
    c.rhs = 1;
    c.mult.assign(n, Rat(0));
    c.mult[j] = 1;
    cs.push_back(std::move(c));
  }

  auto find_contradiction = [&](const std::vector<FmConstraint>& list)
      -> const FmConstraint* {
    for (const auto& c : list) {
      bool allzero = true;
      for (const auto& x : c.coeffs)
        if (x != 0) {
          allzero = false;
          break;
        }
      if (allzero && c.rhs > 0) return &c;
    }
    return nullptr;
  };

  // snapshots per eliminated variable, for back-substitution
  std::vector<std::vector<FmConstraint>> levels;

  for (int var = 0; var < dim; ++var) {
    if (const FmConstraint* bad = find_contradiction(cs)) {
      // 0 >= positive: the multipliers certify sum c_j g_j = 0
      Int scale = 1;
      for (const auto& m : bad->mult) scale = int_lcm(scale, m.get_den());
      out.certificate.assign(n, Int(0));
      for (size_t j = 0; j < n; ++j)
        out.certificate[j] = Rat(bad->mult[j] * scale).get_num();
      return out;
    }
    levels.push_back(cs);
    std::vector<FmConstraint> next;
    std::vector<const FmConstraint*> pos, neg;
    for (const auto& c : cs) {
      if (c.coeffs[var] > 0)
        pos.push_back(&c);
      else if (c.coeffs[var] < 0)
        neg.push_back(&c);
      else
        next.push_back(c);
    }
    for (const auto* p : pos)
      for (const auto* q : neg) {
        Rat wp = 1 / p->coeffs[var];
        Rat wq = -1 / q->coeffs[var];
        FmConstraint c;
        c.coeffs.assign(static_cast<size_t>(dim), Rat(0));
        for (int i = 0; i < dim; ++i)
          c.coeffs[i] = wp * p->coeffs[i] + wq * q->coeffs[i];
        c.rhs = wp * p->rhs + wq * q->rhs;
        c.mult.assign(n, Rat(0));
        for (size_t j = 0; j < n; ++j) c.mult[j] = wp * p->mult[j] + wq * q->mult[j];
        next.push_back(std::move(c));
        if (next.size() > 200000)
          throw error("Fourier-Motzkin blow-up beyond supported input sizes");
      }
    cs = std::move(next);
  }
  if (const FmConstraint* bad = find_contradiction(cs)) {
    Int scale = 1;
    for (const auto& m : bad->mult) scale = int_lcm(scale, m.get_den());
    out.certificate.assign(n, Int(0));
    for (size_t j = 0; j < n; ++j)
      out.certificate[j] = Rat(bad->mult[j] * scale).get_num();
    return out;
  }

  // feasible: back-substitute from the last variable to the first
  out.feasible = true;
  out.functional.assign(static_cast<size_t>(dim), Rat(0));
  for (int var = dim - 1; var >= 0; --var) {
    const auto& level = levels[var];
    bool has_lo = false, has_hi = false;
    Rat lo = 0, hi = 0;
    for (const auto& c : level) {
      if (c.coeffs[var] == 0) continue;
      Rat rest = c.rhs;
      for (int i = var + 1; i < dim; ++i) rest -= c.coeffs[i] * out.functional[i];
      Rat bound = rest / c.coeffs[var];
      if (c.coeffs[var] > 0) {  // lambda_var >= bound
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else {  // lambda_var <= bound
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      }
    }
    if (has_lo && has_hi)
      out.functional[var] = (lo + hi) / 2;
    else if (has_lo)
      out.functional[var] = lo;
    else if (has_hi)
      out.functional[var] = hi;
  }
  return out;
}

}  // namespace

AffineSemigroup::AffineSemigroup(int ambient_dim, std::vector<VecInt> generators)
    : dim_(ambient_dim) {
  if (ambient_dim < 0) throw dimension_error("negative ambient dimension");
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != dim_)
      throw dimension_error("generator has wrong length");
    if (is_zero(g)) continue;
    bool dup = false;
    for (const auto& h : gens_)
      if (h == g) {
        dup = true;
        break;
      }
    if (!dup) gens_.push_back(std::move(g));
  }
  FmOutcome fm = fourier_motzkin(gens_, dim_);
  if (fm.feasible)
    grading_ = std::move(fm.functional);
  else
    witness_ = std::move(fm.certificate);
}

const VecRat& AffineSemigroup::grading() const {
  if (!grading_) throw precondition_error("semigroup is not positive");
  return *grading_;
}

const std::vector<Int>& AffineSemigroup::nonpositivity_witness() const {
  if (!witness_) throw precondition_error("semigroup is positive");
  return *witness_;
}

bool AffineSemigroup::operator==(const AffineSemigroup& o) const {
  return dim_ == o.dim_ && gens_ == o.gens_;
}

std::string AffineSemigroup::to_string() const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    if (dim_ == 1)
      os << gens_[i][0];
    else
      os << vec_to_string(gens_[i]);
  }
  if (gens_.empty()) os << "0";
  os << ">";
  return os.str();
}

IntegerLattice gp(const AffineSemigroup& s) {
  return lattice_from_rows(s.ambient_dim(), s.generators());
}

int semigroup_rank(const AffineSemigroup& s) { return gp(s).rank(); }

PositivityResult is_positive(const AffineSemigroup& s) {
  PositivityResult r;
  r.positive = s.positive();
  if (r.positive)
    r.functional = s.grading();
  else
    r.zero_combination = s.nonpositivity_witness();
  return r;
}

namespace {

// Depth-first search over coefficient tuples in lexicographic order; the
// first solution found is the lexicographically smallest one.
struct MemberSearch {
  const std::vector<VecInt>& gens;
  const VecRat* lambda;       // graded budget (positive case)
  const Int* coeff_budget;    // total coefficient cap (bounded case)
  std::vector<Int> coeffs;
  std::vector<Int> best;
  bool found = false;

  bool run(size_t idx, VecInt residual, Rat degree_left, Int coeffs_left) {
    if (is_zero(residual)) {
      best = coeffs;
      for (size_t i = idx; i < gens.size(); ++i) best[i] = 0;
      return true;
    }
    if (idx == gens.size()) return false;
    Rat gdeg = lambda ? dot(*lambda, gens[idx]) : Rat(0);
    Int a = 0;
    while (true) {
      if (lambda && degree_left < 0) break;
      if (coeff_budget && coeffs_left < 0) break;
      coeffs[idx] = a;
      if (run(idx + 1, residual, degree_left, coeffs_left)) return true;
      a += 1;
      for (size_t i = 0; i < residual.size(); ++i) residual[i] -= gens[idx][i];
      if (lambda) degree_left -= gdeg;
      if (coeff_budget) coeffs_left -= 1;
    }
    coeffs[idx] = 0;
    return false;
  }
};

}  // namespace

MembershipDecision member(const AffineSemigroup& s, const VecInt& x,
                          const std::optional<Int>& bound) {
  if (static_cast<int>(x.size()) != s.ambient_dim())
    throw dimension_error("member: vector length does not match ambient dimension");
  MembershipDecision d;
  if (is_zero(x)) {
    d.verdict = MembershipDecision::Verdict::Yes;
    d.coefficients.assign(s.generators().size(), Int(0));
    return d;
  }
  if (s.trivial()) {
    d.verdict = MembershipDecision::Verdict::No;
    return d;
  }
  if (s.positive()) {
    const VecRat& lam = s.grading();
    Rat budget = dot(lam, x);
    MemberSearch ms{s.generators(), &lam, nullptr,
                    std::vector<Int>(s.generators().size(), Int(0)),
                    {},
                    false};
    if (budget >= 0 && ms.run(0, x, budget, 0)) {
      d.verdict = MembershipDecision::Verdict::Yes;
      d.coefficients = ms.best;
    } else {
      d.verdict = MembershipDecision::Verdict::No;
    }
    return d;
  }
  if (!bound)
    throw precondition_error("member: bound required for a non-positive semigroup");
  if (!lattice_member(gp(s), x)) {
    d.verdict = MembershipDecision::Verdict::No;  // not even in gp(S)
    return d;
  }
  MemberSearch ms{s.generators(), nullptr, &*bound,
                  std::vector<Int>(s.generators().size(), Int(0)),
                  {},
                  false};
  if (ms.run(0, x, Rat(0), *bound)) {
    d.verdict = MembershipDecision::Verdict::Yes;
    d.coefficients = ms.best;
  } else {
    d.verdict = MembershipDecision::Verdict::Unknown;
    d.search_bound = *bound;
  }
  return d;
}

AffineSemigroup sum(const AffineSemigroup& s1, const AffineSemigroup& s2) {
  if (s1.ambient_dim() != s2.ambient_dim())
    throw dimension_error("sum: ambient dimensions differ");
  std::vector<VecInt> gens = s1.generators();
  for (const auto& g : s2.generators()) gens.push_back(g);
  return AffineSemigroup(s1.ambient_dim(), std::move(gens));
}

AffineSemigroup scale(const AffineSemigroup& s, const Int& a) {
  if (a < 1) throw precondition_error("scale: factor must be >= 1");
  std::vector<VecInt> gens;
  gens.reserve(s.generators().size());
  for (const auto& g : s.generators()) gens.push_back(vec_scale(a, g));
  return AffineSemigroup(s.ambient_dim(), std::move(gens));
}

AffineSemigroup transform(const AffineSemigroup& s, const RatMatrix& a) {
  if (a.cols() != s.ambient_dim())
    throw dimension_error("transform: matrix shape does not match ambient dimension");
  std::vector<VecInt> gens;
  for (const auto& g : s.generators()) {
    auto img = to_int_vec(rat_mul_col(a, g));
    if (!img)
      throw precondition_error("transform: non-integral image of generator " +
                               vec_to_string(g));
    gens.push_back(std::move(*img));
  }
  return AffineSemigroup(a.rows(), std::move(gens));
}

bool equal_as_submonoids(const AffineSemigroup& s1, const AffineSemigroup& s2,
                         const std::optional<Int>& bound) {
  if (s1.ambient_dim() != s2.ambient_dim())
    throw dimension_error("equal_as_submonoids: ambient dimensions differ");
  auto check = [&](const AffineSemigroup& from, const AffineSemigroup& to) {
    for (const auto& g : from.generators()) {
      MembershipDecision d = member(to, g, bound);
      if (d.verdict == MembershipDecision::Verdict::Unknown)
        throw precondition_error(
            "equal_as_submonoids: membership undecided at the given bound");
      if (!d.yes()) return false;
    }
    return true;
  };
  return check(s1, s2) && check(s2, s1);
}

bool is_numerical(const AffineSemigroup& s) {
  if (s.ambient_dim() != 1) return false;
  for (const auto& g : s.generators())
    if (g[0] <= 0) return false;
  return true;
}

bool embeds_in_numerical(const AffineSemigroup& s) {
  return s.positive() && semigroup_rank(s) <= 1;
}

Int gcd_numerical(const AffineSemigroup& s) {
  if (!is_numerical(s) || s.trivial())
    throw precondition_error("gcd_numerical: not a nontrivial numerical semigroup");
  Int g = 0;
  for (const auto& v : s.generators()) g = int_gcd(g, v[0]);
  return g;
}

namespace {

constexpr long kSieveCap = 4'000'000;

// Membership sieve for a numerical semigroup on 0..bound.
std::vector<bool> numerical_sieve(const AffineSemigroup& s, long bound) {
  std::vector<bool> in(static_cast<size_t>(bound) + 1, false);
  in[0] = true;
  std::vector<long> gs;
  for (const auto& g : s.generators()) {
    if (!g[0].fits_slong_p()) throw error("numerical generator too large");
    gs.push_back(g[0].get_si());
  }
  for (long v = 1; v <= bound; ++v)
    for (long g : gs)
      if (g <= v && in[static_cast<size_t>(v - g)]) {
        in[static_cast<size_t>(v)] = true;
        break;
      }
  return in;
}

// Least c such that every multiple of gcd(S) at or beyond c lies in S,
// certified by a full window of gcd-multiples in S.
long certified_conductor(const AffineSemigroup& s) {
  long g = gcd_numerical(s).get_si();
  long mingen = 0;
  for (const auto& v : s.generators()) {
    long x = v[0].get_si();
    if (mingen == 0 || x < mingen) mingen = x;
  }
  long bound = 4 * mingen + g;
  while (bound <= kSieveCap) {
    auto in = numerical_sieve(s, bound);
    long window = mingen / g;  // consecutive gcd-multiples needed
    long run = 0;
    for (long v = 0; v <= bound; v += g) {
      run = in[static_cast<size_t>(v)] ? run + 1 : 0;
      if (run >= window) return v - (window - 1) * g;
    }
    bound *= 2;
  }
  throw error("numerical conductor search exceeded the supported range");
}

}  // namespace

AffineSemigroup intersect_numerical(const AffineSemigroup& s1,
                                    const AffineSemigroup& s2) {
  if (!is_numerical(s1) || !is_numerical(s2))
    throw precondition_error("intersect_numerical: inputs must be numerical");
  if (s1.trivial() || s2.trivial())
    return AffineSemigroup(1, {});
  long c1 = certified_conductor(s1);
  long c2 = certified_conductor(s2);
  Int d = int_lcm(gcd_numerical(s1), gcd_numerical(s2));
  long dl = d.get_si();
  // every multiple of d at or beyond C is in both semigroups
  long C = std::max(c1, c2);
  C += (dl - C % dl) % dl;
  // first nonzero common member
  long hi = C + 2 * dl;
  auto in1 = numerical_sieve(s1, hi);
  auto in2 = numerical_sieve(s2, hi);
  long mu = 0;
  for (long v = 1; v <= hi; ++v)
    if (in1[static_cast<size_t>(v)] && in2[static_cast<size_t>(v)]) {
      mu = v;
      break;
    }
  if (mu == 0) throw error("intersect_numerical: no common member found");
  // all minimal generators lie at or below C + mu
  long top = C + mu;
  auto inA = numerical_sieve(s1, top);
  auto inB = numerical_sieve(s2, top);
  std::vector<long> members;
  std::vector<bool> common(static_cast<size_t>(top) + 1, false);
  for (long v = 1; v <= top; ++v)
    if (inA[static_cast<size_t>(v)] && inB[static_cast<size_t>(v)]) {
      common[static_cast<size_t>(v)] = true;
      members.push_back(v);
    }
  std::vector<VecInt> gens;
  for (long m : members) {
    bool decomposable = false;
    for (long v = 1; v < m && !decomposable; ++v)
      if (common[static_cast<size_t>(v)] && common[static_cast<size_t>(m - v)])
        decomposable = true;
    if (!decomposable) gens.push_back({Int(m)});
  }
  AffineSemigroup result(1, std::move(gens));
  // stability cross-check: the intersection's gcd is forced
  if (gcd_numerical(result) != d)
    throw error("intersect_numerical: enumeration did not stabilize");
  return result;
}

std::vector<Int> minimal_generators_numerical(const AffineSemigroup& s) {
  if (!is_numerical(s))
    throw precondition_error("minimal_generators_numerical: not numerical");
  if (s.trivial()) return {};
  long maxgen = 0;
  for (const auto& g : s.generators()) maxgen = std::max(maxgen, g[0].get_si());
  auto in = numerical_sieve(s, maxgen);
  std::vector<Int> out;
  for (const auto& g : s.generators()) {
    long m = g[0].get_si();
    bool decomposable = false;
    for (long v = 1; v < m && !decomposable; ++v)
      if (in[static_cast<size_t>(v)] && in[static_cast<size_t>(m - v)])
        decomposable = true;
    if (!decomposable) out.push_back(g[0]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void enum_rec(const std::vector<VecInt>& gens, size_t idx, const VecInt& v,
              const Rat& used, const Rat& bound, const VecRat* lambda,
              const Int& coeffs_used, const Int& coeff_bound,
              std::set<VecInt>& out) {
  out.insert(v);
  for (size_t i = idx; i < gens.size(); ++i) {
    if (lambda) {
      Rat u = used + dot(*lambda, gens[i]);
      if (u > bound) continue;
      enum_rec(gens, i, vec_add(v, gens[i]), u, bound, lambda, coeffs_used,
               coeff_bound, out);
    } else {
      if (coeffs_used + 1 > coeff_bound) continue;
      enum_rec(gens, i, vec_add(v, gens[i]), used, bound, lambda,
               coeffs_used + 1, coeff_bound, out);
    }
  }
}

}  // namespace

std::vector<VecInt> enumerate_by_coeff_sum(const AffineSemigroup& s, const Int& bound) {
  std::set<VecInt> out;
  enum_rec(s.generators(), 0, zero_vec(s.ambient_dim()), Rat(0), Rat(0), nullptr,
           Int(0), bound, out);
  return {out.begin(), out.end()};
}

std::vector<VecInt> enumerate_by_degree(const AffineSemigroup& s, const VecRat& lambda,
                                        const Rat& bound) {
  std::set<VecInt> out;
  enum_rec(s.generators(), 0, zero_vec(s.ambient_dim()), Rat(0), bound, &lambda,
           Int(0), Int(0), out);
  return {out.begin(), out.end()};
}

}  // namespace affsg
