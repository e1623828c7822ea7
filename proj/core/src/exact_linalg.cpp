#include "qgen/exact_linalg.hpp"

#include <algorithm>
#include <set>

#include "qgen/errors.hpp"

namespace qgen {
namespace {

void require_same_ambient(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.word() != b.word() || a.dimension() != b.dimension()) {
    throw MismatchError("subspaces on different ambients: '" + a.word().to_string() + "' N=" +
                        std::to_string(a.dimension().value()) + " vs '" + b.word().to_string() +
                        "' N=" + std::to_string(b.dimension().value()));
  }
}

void require_same_ambient(const SubspaceBasis& a, const SparseTensor& v) {
  if (a.word() != v.word() || a.dimension() != v.dimension()) {
    throw MismatchError("vector on '" + v.word().to_string() + "' N=" +
                        std::to_string(v.dimension().value()) + " tested against subspace on '" +
                        a.word().to_string() + "' N=" + std::to_string(a.dimension().value()));
  }
}

// Divides out the content and makes the leading entry positive.
void normalize(SparseRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// row <- s * row - t * other, merging supports.
SparseRow combine(const SparseRow& row, const mpz_class& s, const SparseRow& other, const mpz_class& t) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  auto i = row.begin();
  auto j = other.begin();
  mpz_class tmp;
  while (i != row.end() || j != other.end()) {
    if (j == other.end() || (i != row.end() && i->first < j->first)) {
      out.emplace_back(i->first, s * i->second);
      ++i;
    } else if (i == row.end() || j->first < i->first) {
      out.emplace_back(j->first, -t * j->second);
      ++j;
    } else {
      tmp = s * i->second - t * j->second;
      if (tmp != 0) out.emplace_back(i->first, tmp);
      ++i;
      ++j;
    }
  }
  return out;
}

// Clears the entry of `row` at pivot.front().first using `pivot`.
void eliminate(SparseRow& row, const SparseRow& pivot, std::uint64_t col) {
  auto it = std::ranges::lower_bound(row, col, {}, &SparseRow::value_type::first);
  if (it == row.end() || it->first != col) return;
  const mpz_class& lead = pivot.front().second;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), it->second.get_mpz_t());
  const mpz_class s = lead / g;
  const mpz_class t = it->second / g;
  row = combine(row, s, pivot, t);
  normalize(row);
}

SparseRow to_row(const SparseTensor& t) { return SparseRow(t.entries().begin(), t.entries().end()); }

// Sparse rows first keeps fill-in down when dense partition tensors are mixed in.
std::vector<const SparseTensor*> by_sparsity(const SubspaceBasis& b) {
  std::vector<const SparseTensor*> order;
  for (const auto& v : b.vectors()) order.push_back(&v);
  std::ranges::stable_sort(order, {}, [](const SparseTensor* v) { return v->nnz(); });
  return order;
}

EchelonForm echelon_of(const SubspaceBasis& b) {
  EchelonForm form;
  for (const auto* v : by_sparsity(b)) form.insert(to_row(*v));
  return form;
}

std::set<std::uint64_t> coordinate_support(const SubspaceBasis& b) {
  std::set<std::uint64_t> support;
  for (const auto& v : b.vectors()) support.insert(v.entries().front().first);
  return support;
}

SparseRow without_columns(const SparseTensor& v, const std::set<std::uint64_t>& dropped) {
  SparseRow row;
  for (const auto& e : v.entries()) {
    if (!dropped.contains(e.first)) row.push_back(e);
  }
  return row;
}

// dim(span A ∩ C_I) = rank(A) - rank(A restricted to columns outside I).
std::size_t dim_intersection_with_coordinates(const SubspaceBasis& a, const SubspaceBasis& coords) {
  const auto support = coordinate_support(coords);
  EchelonForm full;
  EchelonForm projected;
  for (const auto* v : by_sparsity(a)) {
    full.insert(to_row(*v));
    projected.insert(without_columns(*v, support));
  }
  return full.rank() - projected.rank();
}

}  // namespace

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("ragged rows in ExactMatrix::from_rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::size_t rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m(i, j);
      a[i * cols + j] = q.get_num() * (scale / q.get_den());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };

  std::size_t r = 0;
  mpz_class previous = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), previous.get_mpz_t());
      }
      at(i, c) = 0;
    }
    previous = at(r, c);
    ++r;
  }
  return r;
}

SparseRow EchelonForm::reduce(SparseRow row) const {
  normalize(row);
  while (!row.empty()) {
    const std::uint64_t lead = row.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) break;
    eliminate(row, it->second, lead);
  }
  return row;
}

bool EchelonForm::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::uint64_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool EchelonForm::reduces_to_zero(SparseRow row) const { return reduce(std::move(row)).empty(); }

std::vector<SparseRow> EchelonForm::nullspace(std::uint64_t num_cols) const {
  std::vector<std::pair<std::uint64_t, SparseRow>> rref(pivots_.begin(), pivots_.end());
  if (!rref.empty() && rref.back().second.back().first >= num_cols) {
    throw PreconditionError("nullspace: stored rows reach beyond the requested column count");
  }
  // Back-substitution: clear every other pivot column from each row.
  for (std::size_t i = rref.size(); i-- > 0;) {
    for (std::size_t j = i + 1; j < rref.size(); ++j) {
      eliminate(rref[i].second, rref[j].second, rref[j].first);
    }
  }

  std::vector<SparseRow> basis;
  std::size_t next_pivot = 0;
  for (std::uint64_t free = 0; free < num_cols; ++free) {
    if (next_pivot < rref.size() && rref[next_pivot].first == free) {
      ++next_pivot;
      continue;
    }
    // x_free = L, x_{c_i} = -row_i[free] * L / lead_i.
    struct Hit {
      std::uint64_t col;
      const mpz_class* value;
      const mpz_class* lead;
    };
    std::vector<Hit> hits;
    mpz_class scale = 1;
    for (const auto& [col, row] : rref) {
      if (col > free) break;
      auto it = std::ranges::lower_bound(row, free, {}, &SparseRow::value_type::first);
      if (it == row.end() || it->first != free) continue;
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), row.front().second.get_mpz_t());
      hits.push_back({col, &it->second, &row.front().second});
    }
    SparseRow v;
    for (const auto& hit : hits) v.emplace_back(hit.col, -*hit.value * (scale / *hit.lead));
    v.emplace_back(free, scale);
    std::ranges::sort(v, {}, &SparseRow::value_type::first);
    normalize(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

void SubspaceBasis::add(SparseTensor v) {
  if (v.word() != word_ || v.dimension() != n_) {
    throw MismatchError("vector on '" + v.word().to_string() + "' added to subspace on '" +
                        word_.to_string() + "'");
  }
  vectors_.push_back(std::move(v));
}

bool SubspaceBasis::is_coordinate() const noexcept {
  return std::ranges::all_of(vectors_, [](const SparseTensor& v) {
    return v.nnz() == 1 && v.entries().front().second == 1;
  });
}

std::size_t dim_span(const SubspaceBasis& b) { return echelon_of(b).rank(); }

std::size_t dim_intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_same_ambient(a, b);
  if (b.is_coordinate()) return dim_intersection_with_coordinates(a, b);
  if (a.is_coordinate()) return dim_intersection_with_coordinates(b, a);
  EchelonForm stacked;
  EchelonForm only_a;
  EchelonForm only_b;
  for (const auto* v : by_sparsity(a)) {
    only_a.insert(to_row(*v));
    stacked.insert(to_row(*v));
  }
  for (const auto* v : by_sparsity(b)) {
    only_b.insert(to_row(*v));
    stacked.insert(to_row(*v));
  }
  return only_a.rank() + only_b.rank() - stacked.rank();
}

bool contains(const SubspaceBasis& a, const SparseTensor& v) {
  require_same_ambient(a, v);
  return echelon_of(a).reduces_to_zero(to_row(v));
}

SubspaceBasis independent_subset(const SubspaceBasis& b) {
  SubspaceBasis out(b.word(), b.dimension());
  EchelonForm form;
  for (const auto& v : b.vectors()) {
    if (form.insert(to_row(v))) out.add(v);
  }
  return out;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_same_ambient(a, b);
  const SubspaceBasis ia = independent_subset(a);
  const SubspaceBasis ib = independent_subset(b);
  const std::size_t na = ia.size();
  const std::size_t unknowns = na + ib.size();

  // One constraint per ambient coordinate: sum_i x_i a_i[c] - sum_j y_j b_j[c] = 0.
  std::map<std::uint64_t, SparseRow> constraints;
  for (std::size_t i = 0; i < na; ++i) {
    for (const auto& [key, value] : ia.vectors()[i].entries()) constraints[key].emplace_back(i, value);
  }
  for (std::size_t j = 0; j < ib.size(); ++j) {
    for (const auto& [key, value] : ib.vectors()[j].entries()) {
      constraints[key].emplace_back(na + j, -value);
    }
  }
  EchelonForm system;
  for (auto& [key, row] : constraints) system.insert(std::move(row));

  SubspaceBasis out(a.word(), a.dimension());
  for (const auto& kernel : system.nullspace(unknowns)) {
    std::vector<SparseTensor::Entry> entries;
    for (const auto& [var, coeff] : kernel) {
      if (var >= na) break;
      for (const auto& [key, value] : ia.vectors()[var].entries()) entries.emplace_back(key, coeff * value);
    }
    auto v = SparseTensor::from_entries(a.word(), a.dimension(), std::move(entries));
    if (!v.is_zero()) out.add(std::move(v));
  }
  return out;
}

}  // namespace qgen
