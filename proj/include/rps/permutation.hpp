#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rps/frame.hpp"

namespace rps {

/// Longest permutation event the library handles. Enumerating the
/// permutation event space grows factorially past this.
inline constexpr std::size_t kMaxEventLength = 8;

/// Ordered sequence of distinct label indices. The default-constructed
/// event is the empty event, which only appears as an intersection result.
class PermutationEvent {
 public:
  using value_type = std::uint8_t;

  constexpr PermutationEvent() = default;
  /// Throws InvalidArgument on repeated labels, indices past kMaxFrameSize
  /// or more than kMaxEventLength elements.
  explicit PermutationEvent(std::span<const std::size_t> sequence);
  PermutationEvent(std::initializer_list<std::size_t> sequence);

  constexpr std::size_t size() const noexcept { return length_; }
  constexpr bool empty() const noexcept { return length_ == 0; }
  constexpr std::size_t operator[](std::size_t pos) const noexcept { return items_[pos]; }
  constexpr std::size_t front() const noexcept { return items_[0]; }
  constexpr std::size_t back() const noexcept { return items_[length_ - 1]; }

  const value_type* begin() const noexcept { return items_.data(); }
  const value_type* end() const noexcept { return items_.data() + length_; }

  /// The event with its order erased.
  constexpr FocalSet elements() const noexcept { return FocalSet(members_); }
  constexpr bool contains(std::size_t label) const noexcept {
    return elements().contains(label);
  }
  /// Zero-based position of `label`, or size() when absent.
  std::size_t position_of(std::size_t label) const noexcept;

  /// Elements of this event that also belong to `keep`, order preserved.
  PermutationEvent filtered_by(FocalSet keep) const noexcept;

  friend constexpr bool operator==(const PermutationEvent& a,
                                   const PermutationEvent& b) noexcept {
    return a.length_ == b.length_ &&
           std::equal(a.items_.begin(), a.items_.begin() + a.length_, b.items_.begin());
  }
  /// Canonical order: by length, then lexicographically by label index.
  friend constexpr std::strong_ordering operator<=>(const PermutationEvent& a,
                                                    const PermutationEvent& b) noexcept {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    for (std::size_t i = 0; i < a.length_; ++i) {
      if (auto c = a.items_[i] <=> b.items_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  void push_unchecked(std::size_t label) noexcept {
    items_[length_++] = static_cast<value_type>(label);
    members_ |= std::uint64_t{1} << label;
  }

  std::array<value_type, kMaxEventLength> items_{};
  std::uint8_t length_ = 0;
  std::uint64_t members_ = 0;
};

/// Renders an event as "(D, N, A)" using the frame's labels.
std::string to_string(const PermutationEvent& event, const Frame& frame);

/// P(n, k) = n! / (n-k)!.
std::uint64_t partial_permutations(std::size_t n, std::size_t k);

/// Perm(n) = sum_{k=0..n} P(n, k): size of the permutation event space
/// including the empty event.
std::uint64_t permutation_space_size(std::size_t n);

/// Every non-empty permutation event over a frame of `frame_size` labels in
/// canonical order (length, then lexicographic). Results are cached per
/// size. Throws InvalidArgument when frame_size is 0 or exceeds
/// kMaxEventLength.
const std::vector<PermutationEvent>& enumerate_pes(std::size_t frame_size);
const std::vector<PermutationEvent>& enumerate_pes(const Frame& frame);

/// Every ordering of the members of `set`, in lexicographic order.
std::vector<PermutationEvent> permutations_of(FocalSet set);

/// Left intersection: A with every element not in B removed, A's order kept.
PermutationEvent left_intersect(const PermutationEvent& a, const PermutationEvent& b) noexcept;

/// Right intersection: B with every element not in A removed, B's order kept.
PermutationEvent right_intersect(const PermutationEvent& a, const PermutationEvent& b) noexcept;

}  // namespace rps
