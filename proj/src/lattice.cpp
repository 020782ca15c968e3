#include "sumset/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sumset/errors.hpp"
#include "sumset/rational.hpp"

namespace sumset {

Coord checked_add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coordinate overflow in addition");
  return r;
}

Coord checked_sub(Coord a, Coord b) {
  Coord r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("coordinate overflow in subtraction");
  return r;
}

Coord checked_mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coordinate overflow in multiplication");
  return r;
}

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

namespace {

bool row_less(std::span<const Coord> a, std::span<const Coord> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string join(std::span<const Coord> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

LatticePoint LatticePoint::operator+(const LatticePoint& other) const {
  if (dim() != other.dim()) throw ContractViolation("point dimension mismatch");
  std::vector<Coord> r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = checked_add(coords_[i], other.coords_[i]);
  return LatticePoint(std::move(r));
}

LatticePoint LatticePoint::operator-(const LatticePoint& other) const {
  if (dim() != other.dim()) throw ContractViolation("point dimension mismatch");
  std::vector<Coord> r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = checked_sub(coords_[i], other.coords_[i]);
  return LatticePoint(std::move(r));
}

std::string LatticePoint::to_string() const { return join(coords_); }

// ---------------------------------------------------------------------------

PointSet::PointSet(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw ContractViolation("point set dimension must be positive");
}

PointSet::PointSet(std::size_t dim, const std::vector<LatticePoint>& points) : PointSet(dim) {
  flat_.reserve(points.size() * dim);
  for (const auto& p : points) {
    if (p.dim() != dim) {
      throw ContractViolation("point " + p.to_string() + " does not have dimension " +
                              std::to_string(dim));
    }
    flat_.insert(flat_.end(), p.coords().begin(), p.coords().end());
  }
  canonicalize();
}

PointSet::PointSet(std::size_t dim, std::initializer_list<std::initializer_list<Coord>> points)
    : PointSet(dim) {
  for (const auto& p : points) {
    if (p.size() != dim) throw ContractViolation("point does not match set dimension");
    flat_.insert(flat_.end(), p.begin(), p.end());
  }
  canonicalize();
}

PointSet PointSet::from_flat(std::size_t dim, std::vector<Coord> flat) {
  PointSet s(dim);
  if (flat.size() % dim != 0) throw ContractViolation("flat coordinate array is not a whole number of rows");
  s.flat_ = std::move(flat);
  s.canonicalize();
  return s;
}

PointSet PointSet::from_values(const std::vector<Coord>& values) { return from_flat(1, values); }

void PointSet::canonicalize() {
  if (dim_ == 1) {
    std::sort(flat_.begin(), flat_.end());
    flat_.erase(std::unique(flat_.begin(), flat_.end()), flat_.end());
    return;
  }
  const std::size_t n = size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return row_less((*this)[a], (*this)[b]); });
  std::vector<Coord> out;
  out.reserve(flat_.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto row = (*this)[order[k]];
    if (k > 0 && std::equal(row.begin(), row.end(), out.end() - static_cast<std::ptrdiff_t>(dim_))) continue;
    out.insert(out.end(), row.begin(), row.end());
  }
  flat_ = std::move(out);
}

std::vector<LatticePoint> PointSet::points() const {
  std::vector<LatticePoint> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

std::size_t PointSet::index_of(std::span<const Coord> p) const {
  if (p.size() != dim_) return size();
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (row_less((*this)[mid], p)) lo = mid + 1;
    else hi = mid;
  }
  if (lo < size() && std::ranges::equal((*this)[lo], p)) return lo;
  return size();
}

bool PointSet::contains(std::span<const Coord> p) const { return index_of(p) < size(); }

PointSet PointSet::translated(std::span<const Coord> t) const {
  if (t.size() != dim_) throw ContractViolation("translation vector dimension mismatch");
  PointSet out(dim_);
  out.flat_.resize(flat_.size());
  for (std::size_t i = 0; i < flat_.size(); ++i) out.flat_[i] = checked_add(flat_[i], t[i % dim_]);
  // translation preserves lexicographic order
  return out;
}

PointSet PointSet::without(std::span<const Coord> p) const {
  PointSet out(dim_);
  const std::size_t skip = index_of(p);
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == skip) continue;
    auto row = (*this)[i];
    out.flat_.insert(out.flat_.end(), row.begin(), row.end());
  }
  return out;
}

PointSet PointSet::united(const PointSet& other) const {
  if (other.dim_ != dim_) throw ContractViolation("point set dimension mismatch");
  std::vector<Coord> flat = flat_;
  flat.insert(flat.end(), other.flat_.begin(), other.flat_.end());
  return from_flat(dim_, std::move(flat));
}

PointSet PointSet::subset(std::span<const std::size_t> rows) const {
  PointSet out(dim_);
  out.flat_.reserve(rows.size() * dim_);
  for (std::size_t r : rows) {
    auto row = (*this)[r];
    out.flat_.insert(out.flat_.end(), row.begin(), row.end());
  }
  out.canonicalize();
  return out;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  if (other.dim_ != dim_) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!other.contains((*this)[i])) return false;
  }
  return true;
}

std::string PointSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? " " : "") << join((*this)[i]);
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------

Direction::Direction(std::vector<Coord> vec) : vec_(std::move(vec)) {
  Coord g = 0;
  for (Coord c : vec_) g = std::gcd(g, c < 0 ? -c : c);
  if (g == 0) throw ContractViolation("direction must be a nonzero vector");
  for (Coord& c : vec_) c /= g;
  pivot_ = static_cast<std::size_t>(
      std::find_if(vec_.begin(), vec_.end(), [](Coord c) { return c != 0; }) - vec_.begin());
  if (vec_[pivot_] < 0) {
    for (Coord& c : vec_) c = -c;
  }
}

Direction Direction::axis(std::size_t dim, std::size_t i) {
  std::vector<Coord> v(dim, 0);
  v.at(i) = 1;
  return Direction(std::move(v));
}

std::string Direction::to_string() const { return join(vec_); }

Coord line_parameter(std::span<const Coord> p, const Direction& dir) {
  return floor_div(p[dir.pivot()], dir[dir.pivot()]);
}

LatticePoint line_key(std::span<const Coord> p, const Direction& dir) {
  if (p.size() != dir.dim()) throw ContractViolation("direction dimension mismatch");
  const Coord t = line_parameter(p, dir);
  std::vector<Coord> key(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) key[i] = checked_sub(p[i], checked_mul(t, dir[i]));
  return LatticePoint(std::move(key));
}

// ---------------------------------------------------------------------------

PointSet sumset(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) {
    throw ContractViolation("sumset: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()) + ")");
  }
  if (a.empty() || b.empty()) throw ContractViolation("sumset: operands must be non-empty");
  const std::size_t d = a.dim();
  std::vector<Coord> flat;
  flat.reserve(a.size() * b.size() * d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto x = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto y = b[j];
      for (std::size_t k = 0; k < d; ++k) flat.push_back(checked_add(x[k], y[k]));
    }
  }
  return PointSet::from_flat(d, std::move(flat));
}

std::size_t sumset_size(const PointSet& a, const PointSet& b) { return sumset(a, b).size(); }

namespace {

// Incremental row-echelon basis over Q.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  // Reduces v against the basis; inserts it and returns true when independent.
  bool insert(std::vector<Rational> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      if (v[c] != 0) {
        const Rational f = v[c] / rows_[r][c];
        for (std::size_t k = c; k < dim_; ++k) v[k] -= f * rows_[r][k];
      }
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) return false;
    pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
    rows_.push_back(std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Rational> difference(std::span<const Coord> p, std::span<const Coord> o) {
  std::vector<Rational> v(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) v[k] = make_rational(p[k]) - make_rational(o[k]);
  return v;
}

}  // namespace

std::size_t affine_dim(const PointSet& a) {
  if (a.empty()) throw ContractViolation("affine_dim: empty set");
  EchelonBasis basis(a.dim());
  for (std::size_t i = 1; i < a.size() && basis.rank() < a.dim(); ++i) {
    basis.insert(difference(a[i], a[0]));
  }
  return basis.rank();
}

std::vector<Fiber> project_orthogonal(const PointSet& a, const Direction& dir) {
  if (a.dim() != dir.dim()) throw ContractViolation("project_orthogonal: direction dimension mismatch");
  struct Entry {
    LatticePoint key;
    Coord t;
    std::size_t row;
  };
  std::vector<Entry> entries;
  entries.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    entries.push_back({line_key(a[i], dir), line_parameter(a[i], dir), i});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.key != y.key) return x.key < y.key;
    return x.t < y.t;
  });
  // Along a line, lexicographic order agrees with the parameter order, so the
  // first entry of each group is the lexicographic minimum.
  std::vector<Fiber> fibers;
  std::size_t k = 0;
  while (k < entries.size()) {
    std::size_t e = k;
    std::vector<std::size_t> rows;
    std::vector<Coord> params;
    while (e < entries.size() && entries[e].key == entries[k].key) {
      rows.push_back(entries[e].row);
      params.push_back(entries[e].t);
      ++e;
    }
    std::sort(rows.begin(), rows.end());
    fibers.push_back({a.point(entries[k].row), a.subset(rows), std::move(params)});
    k = e;
  }
  std::sort(fibers.begin(), fibers.end(),
            [](const Fiber& x, const Fiber& y) { return x.representative < y.representative; });
  return fibers;
}

LatticePoint scaled_orthogonal_projection(std::span<const Coord> p, const Direction& dir) {
  if (p.size() != dir.dim()) throw ContractViolation("projection: dimension mismatch");
  Coord norm = 0, dot = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    norm = checked_add(norm, checked_mul(dir[i], dir[i]));
    dot = checked_add(dot, checked_mul(p[i], dir[i]));
  }
  std::vector<Coord> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = checked_sub(checked_mul(norm, p[i]), checked_mul(dot, dir[i]));
  }
  return LatticePoint(std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

Coord to_coord(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("chart coefficient does not fit a coordinate");
  return static_cast<Coord>(z.get_si());
}

}  // namespace

AffineChart::AffineChart(const PointSet& a, const Direction* lead) {
  if (a.empty()) throw ContractViolation("AffineChart: empty set");
  origin_.assign(a[0].begin(), a[0].end());
  const std::size_t d = a.dim();
  EchelonBasis echelon(d);
  if (lead != nullptr) {
    if (lead->dim() != d) throw ContractViolation("AffineChart: lead direction dimension mismatch");
    std::vector<Rational> v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = make_rational((*lead)[k]);
    echelon.insert(v);
    basis_.emplace_back(lead->vec().begin(), lead->vec().end());
  }
  for (std::size_t i = 1; i < a.size() && echelon.rank() < d; ++i) {
    std::vector<Coord> diff(d);
    for (std::size_t k = 0; k < d; ++k) diff[k] = checked_sub(a[i][k], origin_[k]);
    std::vector<Rational> v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = make_rational(diff[k]);
    if (echelon.insert(std::move(v))) basis_.push_back(std::move(diff));
  }
  target_dim_ = basis_.size();
  if (target_dim_ != affine_dim(a)) {
    throw ContractViolation("AffineChart: lead direction does not lie in the affine span");
  }
  const std::size_t k = target_dim_;
  if (k == 0) return;

  // Pick k coordinates on which the basis is independent.
  EchelonBasis rowpick(k);
  for (std::size_t r = 0; r < d && rows_.size() < k; ++r) {
    std::vector<Rational> row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = make_rational(basis_[c][r]);
    if (rowpick.insert(std::move(row))) rows_.push_back(r);
  }

  // Gauss-Jordan inverse of the selected block.
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c) m[i][c] = make_rational(basis_[c][rows_[i]]);
    m[i][k + i] = 1;
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t c = 0; c < 2 * k; ++c) m[i][c] -= f * m[col][c];
    }
  }
  mpz_class den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m[i][k + c].get_den_mpz_t());
  }
  scale_ = to_coord(den);
  solve_.assign(k, std::vector<Coord>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      const Rational scaled = m[i][k + c] * Rational(den);
      solve_[i][c] = to_coord(scaled.get_num());
    }
  }
}

LatticePoint AffineChart::map(std::span<const Coord> p) const {
  const std::size_t d = origin_.size();
  if (p.size() != d) throw ContractViolation("AffineChart::map: dimension mismatch");
  std::vector<Coord> diff(d);
  for (std::size_t i = 0; i < d; ++i) diff[i] = checked_sub(p[i], origin_[i]);
  const std::size_t k = target_dim_;
  std::vector<Coord> image(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c) image[i] = checked_add(image[i], checked_mul(solve_[i][c], diff[rows_[c]]));
  }
  // image = scale * weights; the point lies in the span iff basis * image == scale * diff
  for (std::size_t r = 0; r < d; ++r) {
    Coord lhs = 0;
    for (std::size_t c = 0; c < k; ++c) lhs = checked_add(lhs, checked_mul(basis_[c][r], image[c]));
    if (lhs != checked_mul(scale_, diff[r])) {
      throw ContractViolation("AffineChart::map: point " + LatticePoint(p).to_string() +
                              " is outside the charted affine span");
    }
  }
  return LatticePoint(std::move(image));
}

PointSet AffineChart::map(const PointSet& a) const {
  if (target_dim_ == 0) throw ContractViolation("AffineChart::map: chart of a single point has no coordinates");
  std::vector<Coord> flat;
  flat.reserve(a.size() * target_dim_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto q = map(a[i]);
    flat.insert(flat.end(), q.coords().begin(), q.coords().end());
  }
  return PointSet::from_flat(target_dim_, std::move(flat));
}

}  // namespace sumset
