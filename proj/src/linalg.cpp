#include "chevex/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace chevex {

namespace {
void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || !(a.field() == b.field()))
    throw FieldError("vector dimension or field mismatch");
}
}  // namespace

bool Vec::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

Vec Vec::operator+(const Vec& o) const {
  require_same_size(*this, o);
  Vec r = *this;
  for (int i = 0; i < size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  require_same_size(*this, o);
  Vec r = *this;
  for (int i = 0; i < size(); ++i) r.coords_[i] -= o.coords_[i];
  return r;
}

Vec Vec::operator*(const Scalar& c) const {
  Vec r = *this;
  for (auto& x : r.coords_) x *= c;
  return r;
}

Vec Vec::operator-() const {
  Vec r = *this;
  for (auto& x : r.coords_) x = -x;
  return r;
}

Vec& Vec::operator+=(const Vec& o) {
  require_same_size(*this, o);
  for (int i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vec& Vec::add_scaled(const Vec& o, const Scalar& c) {
  require_same_size(*this, o);
  if (c.is_zero()) return *this;
  for (int i = 0; i < size(); ++i) coords_[i] += o.coords_[i] * c;
  return *this;
}

bool Vec::operator==(const Vec& o) const {
  if (size() != o.size() || !(field_ == o.field_)) return false;
  for (int i = 0; i < size(); ++i)
    if (coords_[i] != o.coords_[i]) return false;
  return true;
}

int Vec::leading_index() const {
  for (int i = 0; i < size(); ++i)
    if (!coords_[i].is_zero()) return i;
  return -1;
}

Vec Vec::canonical_point() const {
  int lead = leading_index();
  if (lead < 0) return *this;
  return *this * coords_[lead].inverse();
}

std::string Vec::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << coords_[i].str();
  os << ")";
  return os.str();
}

Scalar dot(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Scalar s = a.field().zero();
  for (int i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Matrix Matrix::identity(Field f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows) {
  int cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(field_, cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(field_, rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw FieldError("matrix product dimension mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw FieldError("matrix apply dimension mismatch");
  Vec r(field_, rows_);
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
  return data_ == o.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) os << row(i).str() << "\n";
  return os.str();
}

namespace {

// Full RREF in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RankNullspace mat_rank_nullspace(const Matrix& m) {
  Matrix w = m;
  std::vector<int> pivots = rref(w);
  RankNullspace out;
  out.rank = static_cast<int>(pivots.size());

  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.field(), m.cols());
    v[c] = m.field().one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(static_cast<int>(r), c);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw FieldError("solve: rhs dimension mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // 0 = 1 row
  Vec x(m.field(), m.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  return x;
}

Vec RowSpan::reduce(Vec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (!c.is_zero()) v.add_scaled(rows_[r], -c);
  }
  return v;
}

bool RowSpan::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool RowSpan::insert(Vec v) {
  v = reduce(std::move(v));
  int lead = v.leading_index();
  if (lead < 0) return false;
  v = v * v[lead].inverse();
  // back-substitute into existing rows to keep reduced form
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][lead];
    if (!c.is_zero()) rows_[r].add_scaled(v, -c);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

}  // namespace chevex
