#include "symf/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>

#include "symf/error.hpp"

namespace symf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; })) {
    throw DomainError("partition parts must be nonnegative");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::column(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::row(int n) {
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

const PartitionList& partition_list(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const PartitionList>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto list = std::make_unique<PartitionList>();
    list->items = partitions_of(n);
    for (std::size_t i = 0; i < list->items.size(); ++i) {
      list->index.emplace(list->items[i], i);
    }
    slot = std::move(list);
  }
  return *slot;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> result(static_cast<std::size_t>(lambda.part(0)), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++result[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(result));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw DomainError("dominates: partitions " + to_string(lambda) + " and " +
                      to_string(mu) + " have different sizes");
  }
  const auto len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  int sum_lambda = 0;
  int sum_mu = 0;
  for (std::size_t k = 0; k < len; ++k) {
    sum_lambda += lambda[k];
    sum_mu += mu[k];
    if (sum_lambda < sum_mu) return false;
  }
  return true;
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (std::size_t i = 0; i < static_cast<std::size_t>(mu.length()); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(a.length() + b.length()));
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
             b.parts().end(), std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

Partition scale_parts(const Partition& lambda, int k) {
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  for (int& p : parts) p *= k;
  return Partition(std::move(parts));
}

Integer z_value(const Partition& lambda) {
  Integer z = 1;
  auto parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto mult = static_cast<unsigned>(j - i);
    z *= power(Integer(parts[i]), mult) * factorial(mult);
    i = j;
  }
  return z;
}

Integer count_of_type(const Partition& lambda) {
  return factorial(static_cast<unsigned>(lambda.size())) / z_value(lambda);
}

std::string to_string(const Partition& lambda) {
  if (lambda.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(lambda.parts()[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  const std::string original(text);
  if (text == "()") return Partition();
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> parts;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
        value <= 0) {
      throw SyntaxError("malformed partition '" + original +
                        "': expected positive integers like 3,2,1 or ()");
    }
    if (!parts.empty() && value > parts.back()) {
      throw SyntaxError("malformed partition '" + original +
                        "': parts must be weakly decreasing");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

}  // namespace symf
