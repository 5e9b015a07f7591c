#include "rps/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "rps/error.hpp"

namespace rps {

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty()) throw InvalidArgument("frame of discernment must have at least one label");
  if (labels.size() > kMaxFrameSize) {
    throw InvalidArgument("frame of discernment has " + std::to_string(labels.size()) +
                          " labels; at most " + std::to_string(kMaxFrameSize) + " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw InvalidArgument("frame labels must be non-empty");
    if (!seen.insert(label).second) throw InvalidArgument("duplicate frame label '" + label + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

Frame::Frame(std::initializer_list<std::string_view> labels)
    : Frame(std::vector<std::string>(labels.begin(), labels.end())) {}

const std::string& Frame::label(std::size_t index) const {
  if (index >= labels_->size()) {
    throw InvalidArgument("label index " + std::to_string(index) + " outside frame of size " +
                          std::to_string(labels_->size()));
  }
  return (*labels_)[index];
}

std::optional<std::size_t> Frame::find(std::string_view label) const noexcept {
  const auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

std::size_t Frame::index_of(std::string_view label) const {
  if (auto index = find(label)) return *index;
  throw ParseError("unknown label '" + std::string(label) + "'");
}

void require_same_frame(const Frame& a, const Frame& b, std::string_view op) {
  if (!(a == b)) throw InvalidArgument(std::string(op) + ": operands are defined on different frames");
}

FocalSet::FocalSet(std::initializer_list<std::size_t> members) {
  for (auto index : members) bits_ |= singleton(index).bits_;
}

FocalSet FocalSet::singleton(std::size_t index) {
  if (index >= kMaxFrameSize) throw InvalidArgument("label index out of range");
  return FocalSet(std::uint64_t{1} << index);
}

FocalSet FocalSet::full(std::size_t size) {
  if (size > kMaxFrameSize) throw InvalidArgument("frame too large");
  return FocalSet(size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
}

std::vector<std::size_t> FocalSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

}  // namespace rps
