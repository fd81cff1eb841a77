#include "newtonleaf/weyl_group.hpp"

#include <algorithm>
#include <deque>

#include "newtonleaf/errors.hpp"

namespace newtonleaf {

namespace {

std::vector<long long> to_small(const IntMatrix& m) {
  std::vector<long long> out;
  out.reserve(m.rows() * m.cols());
  for (const auto& x : m.data()) out.push_back(to_long(x));
  return out;
}

IntMatrix from_small(const std::vector<long long>& a, std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i * n + j];
  return m;
}

}  // namespace

WeylGroup::Small WeylGroup::mul(const Small& a, const Small& b) const {
  Small c(dim_ * dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      long long x = a[i * dim_ + k];
      if (!x) continue;
      for (std::size_t j = 0; j < dim_; ++j) c[i * dim_ + j] += x * b[k * dim_ + j];
    }
  return c;
}

WeylGroup::WeylGroup(std::size_t dimension, const std::vector<IntMatrix>& cochar_gens,
                     const std::vector<IntMatrix>& char_gens, std::size_t cap) {
  gens_ = cochar_gens.size();
  dim_ = dimension;
  if (char_gens.size() != gens_) throw ConfigurationError("Weyl generators: mismatched lists");
  std::vector<Small> sc, sh;
  for (std::size_t i = 0; i < gens_; ++i) {
    sc.push_back(to_small(cochar_gens[i]));
    sh.push_back(to_small(char_gens[i]));
  }

  Small id(dim_ * dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) id[i * dim_ + i] = 1;
  cochar_.push_back(id);
  char_.push_back(id);
  words_.push_back({});
  index_.emplace(id, 0);
  left_.assign(gens_, {});

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens_; ++i) {
      Small m = mul(sc[i], cochar_[w]);
      auto it = index_.find(m);
      std::size_t idx;
      if (it == index_.end()) {
        if (words_.size() >= cap) throw ConfigurationError("Weyl group enumeration exceeded the element cap");
        idx = words_.size();
        index_.emplace(m, idx);
        cochar_.push_back(std::move(m));
        char_.push_back(mul(sh[i], char_[w]));
        std::vector<int> word{static_cast<int>(i)};
        word.insert(word.end(), words_[w].begin(), words_[w].end());
        words_.push_back(std::move(word));
        queue.push_back(idx);
      } else {
        idx = it->second;
      }
      if (left_[i].size() <= w) left_[i].resize(w + 1);
      left_[i][w] = idx;
    }
  }
  for (auto& row : left_) row.resize(words_.size());

  simple_.resize(gens_);
  for (std::size_t i = 0; i < gens_; ++i) simple_[i] = left_[i][0];

  inverse_.resize(size());
  for (std::size_t w = 0; w < size(); ++w) {
    std::vector<int> rev(words_[w].rbegin(), words_[w].rend());
    inverse_[w] = from_word(rev);
  }
  longest_ = 0;
  for (std::size_t w = 0; w < size(); ++w)
    if (length(w) > length(longest_)) longest_ = w;
}

std::size_t WeylGroup::from_word(const std::vector<int>& word) const {
  std::size_t w = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || static_cast<std::size_t>(*it) >= gens_) throw PreconditionError("Weyl word letter out of range");
    w = left_[static_cast<std::size_t>(*it)][w];
  }
  return w;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  const auto& wa = words_[a];
  std::size_t w = b;
  for (auto it = wa.rbegin(); it != wa.rend(); ++it) w = left_[static_cast<std::size_t>(*it)][w];
  return w;
}

IntMatrix WeylGroup::cochar_matrix(std::size_t w) const { return from_small(cochar_[w], dim_); }
IntMatrix WeylGroup::char_matrix(std::size_t w) const { return from_small(char_[w], dim_); }

std::optional<std::size_t> WeylGroup::find_cochar(const IntMatrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) return std::nullopt;
  for (const auto& x : m.data())
    if (abs(x) > Integer(1) << 40) return std::nullopt;
  auto it = index_.find(to_small(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace newtonleaf
