#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. Indexing is 1-based and returns 0 past the last part.
class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError if `parts` is not weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  int operator[](int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// |lambda|
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  std::span<const int> parts() const noexcept { return parts_; }

  /// lambda'_j = #{i : lambda_i >= j}.
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& lambda);
std::ostream& operator<<(std::ostream& os, const Partition& lambda);
Partition parse_partition(std::string_view text);

/// All partitions of `size`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int size);
/// All partitions whose Young diagram fits in a rows x cols box.
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace schubert
