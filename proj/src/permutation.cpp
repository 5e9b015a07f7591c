#include "rps/permutation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "rps/error.hpp"

namespace rps {

PermutationEvent::PermutationEvent(std::span<const std::size_t> sequence) {
  if (sequence.size() > kMaxEventLength) {
    throw InvalidArgument("permutation event longer than " + std::to_string(kMaxEventLength));
  }
  for (std::size_t label : sequence) {
    if (label >= kMaxFrameSize) throw InvalidArgument("label index out of range");
    if (contains(label)) throw InvalidArgument("permutation event repeats a label");
    push_unchecked(label);
  }
}

PermutationEvent::PermutationEvent(std::initializer_list<std::size_t> sequence)
    : PermutationEvent(std::span<const std::size_t>(sequence.begin(), sequence.size())) {}

std::size_t PermutationEvent::position_of(std::size_t label) const noexcept {
  for (std::size_t i = 0; i < length_; ++i) {
    if (items_[i] == label) return i;
  }
  return length_;
}

PermutationEvent PermutationEvent::filtered_by(FocalSet keep) const noexcept {
  PermutationEvent out;
  for (std::size_t i = 0; i < length_; ++i) {
    if (keep.contains(items_[i])) out.push_unchecked(items_[i]);
  }
  return out;
}

std::string to_string(const PermutationEvent& event, const Frame& frame) {
  std::string out = "(";
  for (std::size_t i = 0; i < event.size(); ++i) {
    if (i != 0) out += ", ";
    out += frame.label(event[i]);
  }
  return out + ")";
}

std::uint64_t partial_permutations(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= n - i;
  return p;
}

std::uint64_t permutation_space_size(std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += partial_permutations(n, k);
  return total;
}

std::vector<PermutationEvent> permutations_of(FocalSet set) {
  std::vector<std::size_t> members = set.members();
  if (members.size() > kMaxEventLength) {
    throw InvalidArgument("cannot enumerate orderings of a set with " +
                          std::to_string(members.size()) + " elements");
  }
  std::vector<PermutationEvent> out;
  if (members.empty()) return out;
  do {
    out.emplace_back(std::span<const std::size_t>(members));
  } while (std::next_permutation(members.begin(), members.end()));
  return out;
}

namespace {

std::vector<PermutationEvent> build_pes(std::size_t n) {
  std::vector<PermutationEvent> out;
  out.reserve(permutation_space_size(n) - 1);
  // Length k events in lexicographic order: extend every length k-1 event.
  std::vector<std::vector<std::size_t>> layer{{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : layer) {
      for (std::size_t x = 0; x < n; ++x) {
        if (std::find(prefix.begin(), prefix.end(), x) != prefix.end()) continue;
        auto seq = prefix;
        seq.push_back(x);
        out.emplace_back(std::span<const std::size_t>(seq));
        next.push_back(std::move(seq));
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

const std::vector<PermutationEvent>& enumerate_pes(std::size_t frame_size) {
  if (frame_size == 0 || frame_size > kMaxEventLength) {
    throw InvalidArgument("permutation event space is only enumerated for 1 to " +
                          std::to_string(kMaxEventLength) + " labels, got " +
                          std::to_string(frame_size));
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<const std::vector<PermutationEvent>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[frame_size];
  if (!slot) slot = std::make_unique<const std::vector<PermutationEvent>>(build_pes(frame_size));
  return *slot;
}

const std::vector<PermutationEvent>& enumerate_pes(const Frame& frame) {
  return enumerate_pes(frame.size());
}

PermutationEvent left_intersect(const PermutationEvent& a, const PermutationEvent& b) noexcept {
  return a.filtered_by(b.elements());
}

PermutationEvent right_intersect(const PermutationEvent& a, const PermutationEvent& b) noexcept {
  return b.filtered_by(a.elements());
}

}  // namespace rps
