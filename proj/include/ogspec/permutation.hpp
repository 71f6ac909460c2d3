#pragma once

#include <string>
#include <vector>

namespace ogspec {

// Permutation of {0,...,n-1}, stored in one-line notation. External text and
// JSON use 1-based indices.
//
// Composition convention: a.then(b) applies a first, then b, i.e.
// (a.then(b))(x) = b(a(x)). operator* is an alias for then().
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation from_one_based(const std::vector<int>& images);
  // cycle notation, e.g. "(1,2,4)(3)(5,6,7)"; unseen points are fixed
  static Permutation from_cycles(const std::string& text, int n);

  int degree() const { return (int)img_.size(); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  std::vector<int> one_based() const;

  Permutation then(const Permutation& g) const;
  Permutation operator*(const Permutation& g) const { return then(g); }
  Permutation inverse() const;

  std::vector<std::vector<int>> cycles() const;  // 0-based
  std::string cycle_string() const;              // 1-based, fixed points shown

  bool operator==(const Permutation& o) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

}  // namespace ogspec
