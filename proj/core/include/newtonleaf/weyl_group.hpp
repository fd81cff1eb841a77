#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "newtonleaf/matrix.hpp"

namespace newtonleaf {

// Finite group generated by simple reflections, enumerated once.  Elements
// are indices; 0 is the identity.  Matrices act on ambient cocharacter and
// character coordinates; their entries are small so they are kept in
// machine integers.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 100000;

  WeylGroup() = default;
  // `cochar_gens[i]` and `char_gens[i]` are the two matrices of s_i.
  WeylGroup(std::size_t dimension, const std::vector<IntMatrix>& cochar_gens,
            const std::vector<IntMatrix>& char_gens, std::size_t cap = kDefaultCap);

  std::size_t size() const { return words_.size(); }
  std::size_t rank() const { return gens_; }
  std::size_t dimension() const { return dim_; }
  std::size_t simple(std::size_t i) const { return simple_.at(i); }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t w) const { return inverse_[w]; }
  std::size_t length(std::size_t w) const { return words_[w].size(); }
  // s_i * w
  std::size_t left_simple(std::size_t i, std::size_t w) const { return left_[i][w]; }
  // Canonical reduced word: breadth-first, lowest generator first.
  const std::vector<int>& word(std::size_t w) const { return words_[w]; }
  std::size_t from_word(const std::vector<int>& word) const;
  std::size_t longest() const { return longest_; }

  IntMatrix cochar_matrix(std::size_t w) const;
  IntMatrix char_matrix(std::size_t w) const;
  std::optional<std::size_t> find_cochar(const IntMatrix& m) const;

  IntVector act(std::size_t w, const IntVector& v) const { return apply(cochar_[w], v); }
  RatVector act(std::size_t w, const RatVector& v) const { return apply(cochar_[w], v); }
  IntVector act_char(std::size_t w, const IntVector& v) const { return apply(char_[w], v); }

 private:
  using Small = std::vector<long long>;
  template <class T>
  std::vector<T> apply(const Small& m, const std::vector<T>& v) const {
    std::vector<T> out(dim_, T(0));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        long long c = m[i * dim_ + j];
        if (c) out[i] += T(c) * v[j];
      }
    return out;
  }
  Small mul(const Small& a, const Small& b) const;

  std::size_t dim_ = 0;
  std::size_t gens_ = 0;
  std::vector<Small> cochar_;
  std::vector<Small> char_;
  std::vector<std::vector<int>> words_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> simple_;
  std::vector<std::vector<std::size_t>> left_;
  std::map<Small, std::size_t> index_;
  std::size_t longest_ = 0;
};

}  // namespace newtonleaf
