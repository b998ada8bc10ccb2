#include "symf/tableau.hpp"

#include <algorithm>

#include "symf/error.hpp"

namespace symf {

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!contains(outer, inner)) {
    throw DomainError("skew shape " + to_string(outer) + "/" + to_string(inner) +
                      ": inner partition is not contained in outer");
  }
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty() &&
         static_cast<int>(rows_.size()) > shape_.outer.length()) {
    rows_.pop_back();
  }
  rows_.resize(static_cast<std::size_t>(shape_.outer.length()));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_.outer[r] - shape_.inner[r]) {
      throw DomainError("tableau row " + std::to_string(r + 1) +
                        " does not match the shape");
    }
  }
}

namespace {

Partition row_lengths(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lengths;
  for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    if (lengths[i] > lengths[i - 1]) {
      throw DomainError("tableau rows must have weakly decreasing lengths");
    }
  }
  return Partition(std::move(lengths));
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows)
    : Tableau(SkewShape(row_lengths(rows)), rows) {}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_) {
    for (int v : row) m = std::max(m, v);
  }
  return m;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) return false;
      if (j > 0 && row[j - 1] > row[j]) return false;
      if (r == 0) continue;
      const int col = shape_.inner[r] + static_cast<int>(j);
      if (col < shape_.inner[r - 1]) continue;
      const int above = rows_[r - 1][static_cast<std::size_t>(col - shape_.inner[r - 1])];
      if (above >= row[j]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(cell_count()) + 1, false);
  for (const auto& row : rows_) {
    for (int v : row) {
      if (v > cell_count() || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  return true;
}

SsytStream::SsytStream(SkewShape shape, int max_entry)
    : shape_(std::move(shape)), max_entry_(max_entry) {
  if (max_entry < 0) throw DomainError("max_entry must be nonnegative");
  // Cell index of (row, col) for neighbour lookup.
  std::vector<std::vector<int>> index(static_cast<std::size_t>(shape_.outer.length()));
  for (int r = 0; r < shape_.outer.length(); ++r) {
    const auto ur = static_cast<std::size_t>(r);
    index[ur].assign(static_cast<std::size_t>(shape_.outer[ur]), -1);
    for (int c = shape_.inner[ur]; c < shape_.outer[ur]; ++c) {
      Cell cell{r, -1, -1};
      if (c > shape_.inner[ur]) cell.left = index[ur][static_cast<std::size_t>(c - 1)];
      if (r > 0 && c >= shape_.inner[ur - 1]) {
        cell.above = index[ur - 1][static_cast<std::size_t>(c)];
      }
      index[ur][static_cast<std::size_t>(c)] = static_cast<int>(cells_.size());
      cells_.push_back(cell);
    }
  }
  values_.assign(cells_.size(), 0);
  assigned_.assign(cells_.size(), false);
  used_.assign(static_cast<std::size_t>(max_entry_) + 1, 0);
}

SsytStream::SsytStream(SkewShape shape, std::vector<int> content)
    : SsytStream(std::move(shape), static_cast<int>(content.size())) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw DomainError("content entries must be nonnegative");
    total += c;
  }
  if (total != shape_.cell_count()) done_ = true;
  content_ = std::move(content);
}

int SsytStream::lower_bound(std::size_t k) const {
  int lo = 1;
  const Cell& cell = cells_[k];
  if (cell.left >= 0) lo = std::max(lo, values_[static_cast<std::size_t>(cell.left)]);
  if (cell.above >= 0) lo = std::max(lo, values_[static_cast<std::size_t>(cell.above)] + 1);
  return lo;
}

bool SsytStream::advance() {
  const auto n = static_cast<std::ptrdiff_t>(cells_.size());
  while (pos_ >= 0) {
    const auto k = static_cast<std::size_t>(pos_);
    int start = lower_bound(k);
    if (assigned_[k]) {
      start = values_[k] + 1;
      --used_[static_cast<std::size_t>(values_[k])];
      assigned_[k] = false;
    }
    int chosen = 0;
    for (int v = start; v <= max_entry_; ++v) {
      if (content_ && used_[static_cast<std::size_t>(v)] >= (*content_)[static_cast<std::size_t>(v - 1)]) {
        continue;
      }
      chosen = v;
      break;
    }
    if (chosen == 0) {
      --pos_;
      continue;
    }
    values_[k] = chosen;
    assigned_[k] = true;
    ++used_[static_cast<std::size_t>(chosen)];
    if (pos_ + 1 == n) return true;
    ++pos_;
  }
  return false;
}

Tableau SsytStream::current() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape_.outer.length()));
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    rows[static_cast<std::size_t>(cells_[k].row)].push_back(values_[k]);
  }
  return Tableau(shape_, std::move(rows));
}

std::optional<Tableau> SsytStream::next() {
  if (done_) return std::nullopt;
  if (cells_.empty()) {
    done_ = true;
    return current();
  }
  if (!started_) {
    started_ = true;
    pos_ = 0;
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return current();
}

Integer SsytStream::count() {
  Integer total = 0;
  if (done_) return total;
  if (cells_.empty()) {
    done_ = true;
    return 1;
  }
  started_ = true;
  while (advance()) ++total;
  done_ = true;
  return total;
}

SsytStream enumerate_ssyt(const SkewShape& shape, int max_entry) {
  return SsytStream(shape, max_entry);
}

Integer count_ssyt(const SkewShape& shape, int max_entry) {
  return SsytStream(shape, max_entry).count();
}

Integer kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  return SsytStream(SkewShape(lambda), mu.vec()).count();
}

Integer f_lambda(const Partition& lambda) {
  return kostka(lambda, Partition::column(lambda.size()));
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  SsytStream stream(SkewShape(lambda),
                    std::vector<int>(static_cast<std::size_t>(lambda.size()), 1));
  std::vector<Tableau> out;
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

Monomial weight_monomial(const Tableau& t) {
  Monomial m;
  for (const auto& row : t.rows()) {
    for (int v : row) ++m[v];
  }
  return m;
}

namespace {

Tableau straight(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

}  // namespace

RskPair rsk(const std::vector<int>& word) {
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  int step = 0;
  for (int letter : word) {
    if (letter < 1) throw DomainError("rsk: word entries must be positive");
    ++step;
    int x = letter;
    std::size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({step});
        break;
      }
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q[r].push_back(step);
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  return {straight(std::move(p)), straight(std::move(q))};
}

std::vector<int> rsk_inverse(const Tableau& insertion, const Tableau& recording) {
  if (!insertion.shape().is_straight() || !recording.shape().is_straight() ||
      insertion.shape() != recording.shape()) {
    throw DomainError("rsk_inverse: P and Q must have the same straight shape");
  }
  if (!insertion.is_semistandard()) throw DomainError("rsk_inverse: P is not semistandard");
  if (!recording.is_standard()) throw DomainError("rsk_inverse: Q is not standard");

  auto p = insertion.rows();
  auto q = recording.rows();
  const int n = recording.cell_count();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int step = n; step >= 1; --step) {
    // The largest recording entry sits at the end of some row (a corner).
    std::size_t r = 0;
    while (q[r].empty() || q[r].back() != step) ++r;
    q[r].pop_back();
    int x = p[r].back();
    p[r].pop_back();
    while (r > 0) {
      --r;
      auto& row = p[r];
      // Rightmost entry strictly smaller than x.
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(x, *it);
    }
    word[static_cast<std::size_t>(step - 1)] = x;
    while (!p.empty() && p.back().empty()) {
      p.pop_back();
      q.pop_back();
    }
  }
  return word;
}

}  // namespace symf
