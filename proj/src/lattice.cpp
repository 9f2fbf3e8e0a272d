#include "affsg/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace affsg {

std::string vec_to_string(const VecInt& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << (*this)(i, j);
    }
  }
  os << "]";
  return os.str();
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << (*this)(i, j);
    }
  }
  os << "]";
  return os.str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  try {
    Rat r(s);
    r.canonicalize();
    if (r.get_den() <= 0) throw parse_error("bad rational literal: " + s);
    return r;
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational literal: " + s);
  }
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

VecInt mul_row(const VecInt& v, const IntMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows())
    throw dimension_error("row-vector/matrix shape mismatch");
  VecInt r(static_cast<size_t>(m.cols()), Int(0));
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

VecInt mul_col(const IntMatrix& m, const VecInt& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw dimension_error("matrix/column-vector shape mismatch");
  VecInt r(static_cast<size_t>(m.rows()), Int(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("matrix product shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

VecRat rat_mul_col(const RatMatrix& m, const VecInt& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw dimension_error("matrix/column-vector shape mismatch");
  VecRat r(static_cast<size_t>(m.rows()), Rat(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i] += m(i, j) * Rat(v[j]);
  return r;
}

namespace {

// Row-reduce [a | b]; returns reduced a, reduced b and the pivot column of
// each pivot row. Shared by rank/solve/inverse.
struct Echelon {
  RatMatrix a, b;
  std::vector<int> pivot_col;  // per pivot row
};

Echelon rat_echelon(RatMatrix a, RatMatrix b) {
  int m = a.rows(), n = a.cols();
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < n && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(a(r, j), a(piv, j));
    for (int j = 0; j < b.cols(); ++j) std::swap(b(r, j), b(piv, j));
    Rat inv = 1 / a(r, c);
    for (int j = 0; j < n; ++j) a(r, j) *= inv;
    for (int j = 0; j < b.cols(); ++j) b(r, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (int j = 0; j < n; ++j) a(i, j) -= f * a(r, j);
      for (int j = 0; j < b.cols(); ++j) b(i, j) -= f * b(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(b), std::move(pivots)};
}

}  // namespace

int rat_rank(RatMatrix a) {
  int m = a.rows();
  return static_cast<int>(rat_echelon(std::move(a), RatMatrix(m, 0)).pivot_col.size());
}

std::optional<RatMatrix> rat_solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw dimension_error("solve shape mismatch");
  Echelon e = rat_echelon(a, b);
  int r = static_cast<int>(e.pivot_col.size());
  // consistency: zero rows of a must have zero b
  for (int i = r; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (e.b(i, j) != 0) return std::nullopt;
  RatMatrix x(a.cols(), b.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < b.cols(); ++j) x(e.pivot_col[i], j) = e.b(i, j);
  return x;
}

std::optional<RatMatrix> rat_inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = rat_solve(a, RatMatrix::identity(a.rows()));
  if (!x) return std::nullopt;
  if (rat_rank(a) != a.rows()) return std::nullopt;
  return x;
}

std::optional<VecInt> to_int_vec(const VecRat& v) {
  VecInt r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    r[i] = v[i].get_num();
  }
  return r;
}

// --- Hermite normal form ---

HnfResult hnf(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclidean sweep: bring the minimal nonzero entry of the column
    // (among rows >= r) to row r, reduce below, repeat until clear.
    while (true) {
      int piv = -1;
      for (int i = r; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        if (piv < 0 || mpz_cmpabs(a(i, c).get_mpz_t(), a(piv, c).get_mpz_t()) < 0) piv = i;
      }
      if (piv < 0) break;
      if (piv != r) {
        a.swap_rows(r, piv);
        u.swap_rows(r, piv);
      }
      if (a(r, c) < 0) {
        a.negate_row(r);
        u.negate_row(r);
      }
      bool clear = true;
      for (int i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Int q = fdiv(a(i, c), a(r, c));
        if (q != 0) {
          a.addmul_row(i, q, r);
          u.addmul_row(i, q, r);
        }
        if (a(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (a(r, c) == 0) continue;
    // canonical reduction of the entries above the pivot into [0, pivot)
    for (int i = 0; i < r; ++i) {
      Int q = fdiv(a(i, c), a(r, c));
      if (q != 0) {
        a.addmul_row(i, q, r);
        u.addmul_row(i, q, r);
      }
    }
    ++r;
  }
  return {std::move(a), std::move(u)};
}

// --- Smith normal form ---

SnfResult snf(const IntMatrix& m) {
  IntMatrix a = m;
  int rows = m.rows(), cols = m.cols();
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  IntMatrix vinv = IntMatrix::identity(cols);

  auto col_swap = [&](int i, int j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    vinv.swap_rows(i, j);
  };
  // col i -= q * col j   =>   vinv row j += q * row i
  auto col_addmul = [&](int i, const Int& q, int j) {
    a.addmul_col(i, q, j);
    v.addmul_col(i, q, j);
    vinv.addmul_row(j, -q, i);
  };

  int t = 0;
  int lim = std::min(rows, cols);
  while (t < lim) {
    // minimal-absolute-value pivot in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        if (pi < 0 || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) {
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
    }
    if (pj != t) col_swap(t, pj);

    while (true) {
      if (a(t, t) < 0) {
        a.negate_row(t);
        u.negate_row(t);
      }
      // clear column t
      bool restart = false;
      for (int i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q = fdiv(a(i, t), a(t, t));
        if (q != 0) {
          a.addmul_row(i, q, t);
          u.addmul_row(i, q, t);
        }
        if (a(i, t) != 0) {
          // remainder is strictly smaller: promote it to the pivot
          a.swap_rows(t, i);
          u.swap_rows(t, i);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      // clear row t
      for (int j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q = fdiv(a(t, j), a(t, t));
        if (q != 0) col_addmul(j, q, t);
        if (a(t, j) != 0) {
          col_swap(t, j);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      // column may have been refilled by the column operations only if
      // a row op ran after them, which it did not; both are clear here.
      // divisibility: pivot must divide the whole trailing submatrix
      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            a.addmul_row(t, Int(-1), i);  // row t += row i
            u.addmul_row(t, Int(-1), i);
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    ++t;
  }
  return {std::move(a), std::move(u), std::move(v), std::move(vinv)};
}

IntMatrix left_kernel(const IntMatrix& m) {
  HnfResult r = hnf(m);
  std::vector<VecInt> rows;
  for (int i = 0; i < r.h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < r.h.cols(); ++j)
      if (r.h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) rows.push_back(r.u.row(i));
  }
  return IntMatrix::from_rows(rows, m.rows());
}

// --- IntegerLattice ---

std::string IntegerLattice::to_string() const {
  return "lattice dim=" + std::to_string(dim_) + " basis=" + basis_.to_string();
}

IntegerLattice lattice_from_rows(int ambient_dim, const std::vector<VecInt>& rows) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ambient_dim)
      throw dimension_error("lattice generator has wrong length");
  HnfResult r = hnf(IntMatrix::from_rows(rows, ambient_dim));
  std::vector<VecInt> keep;
  for (int i = 0; i < r.h.rows(); ++i) {
    VecInt row = r.h.row(i);
    if (!is_zero(row)) keep.push_back(std::move(row));
  }
  return IntegerLattice(ambient_dim, IntMatrix::from_rows(keep, ambient_dim));
}

IntegerLattice zero_lattice(int ambient_dim) {
  return IntegerLattice(ambient_dim, IntMatrix(0, ambient_dim));
}

std::optional<VecInt> lattice_coordinates(const IntegerLattice& l, const VecInt& x) {
  if (static_cast<int>(x.size()) != l.ambient_dim())
    throw dimension_error("vector length does not match ambient dimension");
  const IntMatrix& b = l.basis();
  VecInt r = x;
  VecInt coords(static_cast<size_t>(b.rows()), Int(0));
  for (int i = 0; i < b.rows(); ++i) {
    int p = 0;
    while (p < b.cols() && b(i, p) == 0) ++p;
    // basis rows are nonzero by construction
    if (r[p] % b(i, p) != 0) return std::nullopt;
    Int c = r[p] / b(i, p);
    if (c != 0)
      for (int j = 0; j < b.cols(); ++j) r[j] -= c * b(i, j);
    coords[i] = c;
  }
  if (!is_zero(r)) return std::nullopt;
  return coords;
}

bool lattice_member(const IntegerLattice& l, const VecInt& x) {
  return lattice_coordinates(l, x).has_value();
}

bool lattice_contains(const IntegerLattice& outer, const IntegerLattice& inner) {
  for (int i = 0; i < inner.basis().rows(); ++i)
    if (!lattice_member(outer, inner.basis().row(i))) return false;
  return true;
}

IntegerLattice lattice_intersect(const IntegerLattice& l1, const IntegerLattice& l2) {
  if (l1.ambient_dim() != l2.ambient_dim())
    throw dimension_error("intersect: ambient dimensions differ");
  int d = l1.ambient_dim();
  int k1 = l1.rank(), k2 = l2.rank();
  if (k1 == 0 || k2 == 0) return zero_lattice(d);
  IntMatrix stacked(k1 + k2, d);
  for (int i = 0; i < k1; ++i)
    for (int j = 0; j < d; ++j) stacked(i, j) = l1.basis()(i, j);
  for (int i = 0; i < k2; ++i)
    for (int j = 0; j < d; ++j) stacked(k1 + i, j) = l2.basis()(i, j);
  IntMatrix ker = left_kernel(stacked);
  std::vector<VecInt> gens;
  for (int i = 0; i < ker.rows(); ++i) {
    VecInt x(static_cast<size_t>(d), Int(0));
    for (int j = 0; j < k1; ++j)
      if (ker(i, j) != 0)
        for (int c = 0; c < d; ++c) x[c] += ker(i, j) * l1.basis()(j, c);
    gens.push_back(std::move(x));
  }
  return lattice_from_rows(d, gens);
}

IntegerLattice lattice_direct_sum(const IntegerLattice& l1, const IntegerLattice& l2) {
  int d1 = l1.ambient_dim(), d2 = l2.ambient_dim();
  std::vector<VecInt> rows;
  for (int i = 0; i < l1.rank(); ++i)
    rows.push_back(concat(l1.basis().row(i), zero_vec(d2)));
  for (int i = 0; i < l2.rank(); ++i)
    rows.push_back(concat(zero_vec(d1), l2.basis().row(i)));
  return lattice_from_rows(d1 + d2, rows);
}

namespace {

// Basis of l rewritten in coordinates of ambient's basis; throws when the
// containment precondition fails.
IntMatrix coords_in(const IntegerLattice& ambient, const IntegerLattice& l) {
  std::vector<VecInt> rows;
  for (int i = 0; i < l.rank(); ++i) {
    auto c = lattice_coordinates(ambient, l.basis().row(i));
    if (!c)
      throw precondition_error("sublattice is not contained in the ambient lattice");
    rows.push_back(*c);
  }
  return IntMatrix::from_rows(rows, ambient.rank());
}

}  // namespace

IntegerLattice saturation(const IntegerLattice& ambient, const IntegerLattice& l) {
  if (ambient.ambient_dim() != l.ambient_dim())
    throw dimension_error("saturation: ambient dimensions differ");
  int k = l.rank();
  if (k == 0) return zero_lattice(ambient.ambient_dim());
  IntMatrix c = coords_in(ambient, l);
  SnfResult s = snf(c);
  // rowspace(c) = { w * D * V^{-1} }; dividing out the invariant factors
  // leaves the first k rows of V^{-1} as a basis of the saturation in
  // ambient coordinates.
  std::vector<VecInt> rows;
  for (int i = 0; i < k; ++i)
    rows.push_back(mul_row(s.vinv.row(i), ambient.basis()));
  return lattice_from_rows(ambient.ambient_dim(), rows);
}

QuotientStructure quotient_structure(const IntegerLattice& ambient,
                                     const IntegerLattice& l) {
  if (ambient.ambient_dim() != l.ambient_dim())
    throw dimension_error("quotient: ambient dimensions differ");
  int m = ambient.rank();
  int k = l.rank();
  QuotientStructure q;
  if (k == 0) {
    q.free_rank = m;
    q.projection = IntMatrix::identity(m);
    return q;
  }
  IntMatrix c = coords_in(ambient, l);
  SnfResult s = snf(c);
  // basis rows of l are independent, so all k invariants are nonzero
  for (int i = 0; i < k; ++i)
    if (s.d(i, i) >= 2) q.torsion_invariants.push_back(s.d(i, i));
  q.free_rank = m - k;
  // free coordinates are the last m-k entries of c |-> c * V
  q.projection = IntMatrix(q.free_rank, m);
  for (int i = 0; i < q.free_rank; ++i)
    for (int j = 0; j < m; ++j) q.projection(i, j) = s.v(j, k + i);
  return q;
}

VecInt quotient_project(const QuotientStructure& q, const IntegerLattice& ambient,
                        const VecInt& x) {
  auto c = lattice_coordinates(ambient, x);
  if (!c) throw precondition_error("vector is not in the ambient lattice");
  return mul_col(q.projection, *c);
}

}  // namespace affsg
