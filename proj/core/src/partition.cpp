#include "schubert/partition.hpp"

#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    detail::require(parts_[i] >= 0, "partition parts must be nonnegative");
    detail::require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int j = 1; j <= (*this)[1]; ++j) {
    int count = 0;
    for (int part : parts_) count += part >= j ? 1 : 0;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::string to_string(const Partition& lambda) {
  std::ostringstream os;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (i > 1) os << ',';
    os << lambda[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
  return os << '(' << to_string(lambda) << ')';
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (text.find_first_not_of(' ') == std::string_view::npos) return Partition{};
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    auto token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw PreconditionError("malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int size) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(size, size);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int cap) {
    out.emplace_back(current);
    if (static_cast<int>(current.size()) == rows) return;
    for (int part = 1; part <= cap; ++part) {
      current.push_back(part);
      extend(part);
      current.pop_back();
    }
  };
  extend(cols);
  return out;
}

}  // namespace schubert
