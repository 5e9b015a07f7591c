#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rps {

/// Largest frame a FocalSet can address.
inline constexpr std::size_t kMaxFrameSize = 64;

/// Frame of discernment: an ordered list of distinct class labels.
///
/// The label order is fixed at construction. It carries no meaning; it is
/// only used to canonicalize focal sets and permutation events so iteration
/// and serialization are deterministic. Copies share the label storage.
class Frame {
 public:
  /// Throws InvalidArgument on an empty list, an empty label, a duplicate,
  /// or more than kMaxFrameSize labels.
  explicit Frame(std::vector<std::string> labels);
  Frame(std::initializer_list<std::string_view> labels);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::string& label(std::size_t index) const;
  std::span<const std::string> labels() const noexcept { return *labels_; }

  std::optional<std::size_t> find(std::string_view label) const noexcept;
  /// Like find() but throws ParseError naming the unknown label.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const Frame& a, const Frame& b) noexcept {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Throws InvalidArgument when the two frames differ.
void require_same_frame(const Frame& a, const Frame& b, std::string_view op);

/// Non-empty (in valid mass functions) unordered subset of a frame, stored
/// as a bit mask over label indices.
class FocalSet {
 public:
  constexpr FocalSet() = default;
  constexpr explicit FocalSet(std::uint64_t bits) noexcept : bits_(bits) {}
  FocalSet(std::initializer_list<std::size_t> members);

  static FocalSet singleton(std::size_t index);
  /// Every label of a frame with `size` labels.
  static FocalSet full(std::size_t size);

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t index) const noexcept {
    return index < 64 && ((bits_ >> index) & 1U) != 0;
  }
  constexpr bool is_subset_of(FocalSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Member label indices in ascending order.
  std::vector<std::size_t> members() const;

  friend constexpr FocalSet operator&(FocalSet a, FocalSet b) noexcept {
    return FocalSet(a.bits_ & b.bits_);
  }
  friend constexpr FocalSet operator|(FocalSet a, FocalSet b) noexcept {
    return FocalSet(a.bits_ | b.bits_);
  }
  friend constexpr bool operator==(FocalSet a, FocalSet b) noexcept = default;

  /// Canonical order: by cardinality, then lexicographically by the sorted
  /// member indices.
  friend constexpr std::strong_ordering operator<=>(FocalSet a, FocalSet b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    // The lowest differing index belongs to the lexicographically smaller set.
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits_ & lowest) != 0 ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace rps
