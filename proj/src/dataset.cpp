#include "rps/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "rps/error.hpp"

namespace rps {

void FeatureMatrix::append_row(std::span<const double> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw InvalidArgument("row width does not match matrix");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

FeatureMatrix FeatureMatrix::select_rows(std::span<const std::size_t> rows) const {
  FeatureMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto src = row(rows[i]);
    std::copy(src.begin(), src.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  }
  return out;
}

std::vector<std::size_t> Dataset::class_counts() const {
  std::vector<std::size_t> counts(classes.size(), 0);
  for (auto label : labels) ++counts[label];
  return counts;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::string unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

std::optional<double> parse_number(std::string_view cell) {
  if (cell.empty() || cell == "?") return kMissing;
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace

Dataset parse_dataset(std::string_view csv_text, std::string name, const LabelColumn& label) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= csv_text.size()) {
    auto end = csv_text.find('\n', start);
    if (end == std::string_view::npos) end = csv_text.size();
    const auto line = csv_text.substr(start, end - start);
    if (!trim(line).empty()) lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(name + ": empty file");

  const auto header = split_csv_line(lines.front());
  std::size_t label_col = header.size() - 1;
  if (label.index) {
    if (*label.index >= header.size()) {
      throw ParseError(name + ": label column " + std::to_string(*label.index) + " does not exist");
    }
    label_col = *label.index;
  } else if (label.name) {
    const auto it = std::find_if(header.begin(), header.end(),
                                 [&](std::string_view h) { return unquote(h) == *label.name; });
    if (it == header.end()) throw ParseError(name + ": no column named '" + *label.name + "'");
    label_col = static_cast<std::size_t>(it - header.begin());
  }
  if (header.size() < 2) throw ParseError(name + ": need at least one feature and a label column");
  if (lines.size() < 2) throw ParseError(name + ": no data rows");

  Dataset ds;
  ds.name = std::move(name);
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != label_col) ds.feature_names.push_back(unquote(header[c]));
  }

  std::vector<std::string> raw_labels;
  std::vector<double> row(header.size() - 1);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = split_csv_line(lines[r]);
    // Row numbers in messages are 1-based file lines counting the header.
    if (cells.size() != header.size()) {
      throw ParseError(ds.name + ": row " + std::to_string(r + 1) + " has " +
                       std::to_string(cells.size()) + " columns, expected " +
                       std::to_string(header.size()));
    }
    std::size_t f = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == label_col) continue;
      const auto value = parse_number(cells[c]);
      if (!value) {
        throw ParseError(ds.name + ": row " + std::to_string(r + 1) + ", column " +
                         std::to_string(c + 1) + " ('" + unquote(header[c]) +
                         "'): non-numeric value '" + std::string(cells[c]) + "'");
      }
      row[f++] = *value;
    }
    const auto lab = unquote(cells[label_col]);
    if (lab.empty()) {
      throw ParseError(ds.name + ": row " + std::to_string(r + 1) + " has an empty label");
    }
    raw_labels.push_back(lab);
    ds.features.append_row(row);
  }

  const std::set<std::string> distinct(raw_labels.begin(), raw_labels.end());
  ds.classes = Frame(std::vector<std::string>(distinct.begin(), distinct.end()));
  ds.labels.reserve(raw_labels.size());
  for (const auto& lab : raw_labels) ds.labels.push_back(ds.classes.index_of(lab));
  return ds;
}

Dataset load_dataset(const std::filesystem::path& path, const LabelColumn& label) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open dataset '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Dataset ds = parse_dataset(buffer.str(), path.stem().string(), label);
  ds.provenance = path.string();
  return ds;
}

std::string format_dataset_csv(const Dataset& dataset) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (const auto& name : dataset.feature_names) out << name << ',';
  out << "label\n";
  for (std::size_t r = 0; r < dataset.samples(); ++r) {
    for (double v : dataset.features.row(r)) {
      if (is_missing(v)) {
        out << '?';
      } else {
        out << v;
      }
      out << ',';
    }
    out << dataset.classes.label(dataset.labels[r]) << '\n';
  }
  return out.str();
}

PortableRng::PortableRng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t PortableRng::next() { return engine_(); }

std::uint64_t PortableRng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("PortableRng::below: zero bound");
  // Reject the final partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

std::vector<std::size_t> FoldAssignment::test_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldAssignment::train_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] != fold) out.push_back(i);
  }
  return out;
}

FoldAssignment kfold_split(std::span<const std::size_t> labels, std::size_t classes,
                           std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("k-fold split needs k >= 2, got " + std::to_string(k));
  std::vector<std::vector<std::size_t>> members(classes);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= classes) throw InvalidArgument("label index outside class range");
    members[labels[i]].push_back(i);
  }
  for (std::size_t c = 0; c < classes; ++c) {
    if (!members[c].empty() && members[c].size() < k) {
      throw InvalidArgument("class " + std::to_string(c) + " has " + std::to_string(members[c].size()) +
                            " samples, fewer than k = " + std::to_string(k));
    }
  }

  PortableRng rng(seed);
  FoldAssignment out{k, std::vector<std::size_t>(labels.size(), 0)};
  std::size_t cursor = 0;
  for (auto& group : members) {
    rng.shuffle(group);
    for (std::size_t index : group) out.fold_of[index] = cursor++ % k;
  }
  return out;
}

FoldAssignment kfold_split(const Dataset& dataset, std::size_t k, std::uint64_t seed) {
  return kfold_split(dataset.labels, dataset.classes.size(), k, seed);
}

}  // namespace rps
