#include "qgen/sparse_tensor.hpp"

#include <algorithm>
#include <limits>

#include "qgen/errors.hpp"

namespace qgen {
namespace {

std::uint64_t checked_power(int base, std::size_t exponent) {
  std::uint64_t result = 1;
  const auto b = static_cast<std::uint64_t>(base);
  for (std::size_t i = 0; i < exponent; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / b) {
      throw CapExceeded("ambient dimension " + std::to_string(base) + "^" + std::to_string(exponent) +
                        " does not fit in 64 bits");
    }
    result *= b;
  }
  return result;
}

}  // namespace

SparseTensor::SparseTensor(ColoredWord word, Dimension n)
    : word_(std::move(word)), n_(n), ambient_(checked_power(n.value(), word_.size())) {}

SparseTensor SparseTensor::from_entries(ColoredWord word, Dimension n, std::vector<Entry> entries) {
  SparseTensor t(std::move(word), n);
  std::ranges::sort(entries, {}, &Entry::first);
  for (auto& [key, value] : entries) {
    if (key >= t.ambient_) {
      throw PreconditionError("tensor key " + std::to_string(key) + " outside ambient size " +
                              std::to_string(t.ambient_));
    }
    if (!t.entries_.empty() && t.entries_.back().first == key) {
      t.entries_.back().second += value;
      if (t.entries_.back().second == 0) t.entries_.pop_back();
    } else if (value != 0) {
      t.entries_.emplace_back(key, std::move(value));
    }
  }
  return t;
}

SparseTensor SparseTensor::basis(ColoredWord word, Dimension n, std::span<const int> index) {
  SparseTensor t(std::move(word), n);
  t.entries_.emplace_back(t.linear_index(index), 1);
  return t;
}

std::uint64_t SparseTensor::linear_index(std::span<const int> index) const {
  if (index.size() != word_.size()) {
    throw MismatchError("multi-index of length " + std::to_string(index.size()) + " on word of length " +
                        std::to_string(word_.size()));
  }
  std::uint64_t key = 0;
  for (int v : index) {
    if (v < 0 || v >= n_.value()) throw PreconditionError("multi-index value out of range");
    key = key * static_cast<std::uint64_t>(n_.value()) + static_cast<std::uint64_t>(v);
  }
  return key;
}

MultiIndex SparseTensor::multi_index(std::uint64_t key) const {
  MultiIndex index(word_.size());
  const auto n = static_cast<std::uint64_t>(n_.value());
  for (std::size_t i = index.size(); i-- > 0;) {
    index[i] = static_cast<int>(key % n);
    key /= n;
  }
  return index;
}

mpz_class SparseTensor::coefficient(std::span<const int> index) const {
  const auto key = linear_index(index);
  auto it = std::ranges::lower_bound(entries_, key, {}, &Entry::first);
  if (it != entries_.end() && it->first == key) return it->second;
  return 0;
}

std::string SparseTensor::to_string() const {
  std::string s = "[";
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    if (e) s += ',';
    s += "[[";
    const auto index = multi_index(entries_[e].first);
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(index[i] + 1);
    }
    s += "]," + entries_[e].second.get_str() + "]";
  }
  return s + "]";
}

bool SparseTensor::operator==(const SparseTensor& other) const {
  return word_ == other.word_ && n_ == other.n_ && entries_ == other.entries_;
}

void require_same_ambient(const SparseTensor& a, const SparseTensor& b) {
  if (a.word() != b.word() || a.dimension() != b.dimension()) {
    throw MismatchError("tensors on different ambients: '" + a.word().to_string() + "' N=" +
                        std::to_string(a.dimension().value()) + " vs '" + b.word().to_string() +
                        "' N=" + std::to_string(b.dimension().value()));
  }
}

mpz_class inner_product(const SparseTensor& a, const SparseTensor& b) {
  require_same_ambient(a, b);
  mpz_class sum = 0;
  auto i = a.entries().begin();
  auto j = b.entries().begin();
  while (i != a.entries().end() && j != b.entries().end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      sum += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return sum;
}

}  // namespace qgen
