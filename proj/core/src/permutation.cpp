#include "symf/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symf/error.hpp"

namespace symf {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("permutation word is not a bijection of 1.." +
                        std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n) {
    throw DomainError("transposition entries out of range");
  }
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)],
            p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("adjacent transposition index out of range");
  return transposition(n, i, i + 1);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

int Permutation::sign() const {
  const Partition type = cycle_type(*this);
  // Each cycle of length l contributes l - 1 transpositions.
  return (degree() - type.length()) % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("cannot compose permutations of different degree");
  }
  std::vector<int> images(q.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = p.images_[static_cast<std::size_t>(q.images_[i] - 1)];
  }
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : p.word()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Partition cycle_type(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<int> lengths;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    int length = 0;
    for (int i = start; !visited[static_cast<std::size_t>(i - 1)]; i = p(i)) {
      visited[static_cast<std::size_t>(i - 1)] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  return Partition::from_unsorted(std::move(lengths));
}

Permutation class_representative(const Partition& type) {
  std::vector<int> images(static_cast<std::size_t>(type.size()));
  int offset = 0;
  for (int len : type.parts()) {
    for (int j = 0; j < len; ++j) {
      images[static_cast<std::size_t>(offset + j)] = offset + (j + 1) % len + 1;
    }
    offset += len;
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<int> adjacent_word(const Permutation& p) {
  // Peel descents from the right: p = p' s_i with inv(p') = inv(p) - 1.
  std::vector<int> word(p.word().begin(), p.word().end());
  std::vector<int> peeled;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        peeled.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

Permutation parse_permutation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> images;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      images.push_back(v);
    } catch (const std::exception&) {
      throw SyntaxError("malformed permutation word '" + std::string(text) + "'");
    }
  }
  try {
    return Permutation(std::move(images));
  } catch (const DomainError& e) {
    throw SyntaxError("malformed permutation word '" + std::string(text) +
                      "': " + e.what());
  }
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.word().size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(p.word()[i]);
  }
  return out;
}

}  // namespace symf
