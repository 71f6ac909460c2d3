#include "ogspec/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ogspec {

Permutation::Permutation(int n) : img_(n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> hit(img_.size(), false);
  for (int x : img_) {
    if (x < 0 || x >= (int)img_.size() || hit[x])
      throw std::invalid_argument("not a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> z(images.size());
  for (size_t k = 0; k < images.size(); ++k) z[k] = images[k] - 1;
  return Permutation(std::move(z));
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> seen(n, false);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in " + text);
    ++pos;
    std::vector<int> cyc;
    std::string cur;
    for (; pos < text.size() && text[pos] != ')'; ++pos) {
      char c = text[pos];
      if (isdigit((unsigned char)c)) {
        cur.push_back(c);
      } else if (c == ',' || isspace((unsigned char)c)) {
        if (!cur.empty()) {
          cyc.push_back(std::stoi(cur) - 1);
          cur.clear();
        }
      } else {
        throw std::invalid_argument("bad character in cycles: " + text);
      }
    }
    if (pos == text.size()) throw std::invalid_argument("unclosed cycle in " + text);
    ++pos;
    if (!cur.empty()) cyc.push_back(std::stoi(cur) - 1);
    for (int x : cyc) {
      if (x < 0 || x >= n) throw std::invalid_argument("index out of range in " + text);
      if (seen[x]) throw std::invalid_argument("repeated index in " + text);
      seen[x] = true;
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(img_.size());
  for (size_t k = 0; k < img_.size(); ++k) out[k] = img_[k] + 1;
  return out;
}

Permutation Permutation::then(const Permutation& g) const {
  if (degree() != g.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> out(img_.size());
  for (size_t k = 0; k < img_.size(); ++k) out[k] = g.img_[img_[k]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(img_.size());
  for (size_t k = 0; k < img_.size(); ++k) out[img_[k]] = (int)k;
  return Permutation(std::move(out));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    int j = (int)s;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  for (const auto& cyc : cycles()) {
    os << "(";
    for (size_t k = 0; k < cyc.size(); ++k) os << (k ? "," : "") << cyc[k] + 1;
    os << ")";
  }
  return os.str();
}

}  // namespace ogspec
