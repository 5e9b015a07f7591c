#include "rps/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rps/error.hpp"

namespace rps {

namespace {

Json frame_to_json(const Frame& frame) {
  Json labels = Json::array();
  for (const auto& label : frame.labels()) labels.push_back(label);
  return labels;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

std::vector<std::string> string_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError(std::string(what) + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Frame frame_from_json(const Json& j) {
  try {
    return Frame(string_array(j, "frame"));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid frame: ") + e.what());
  }
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<double> number_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(number(item, what));
  return out;
}

std::vector<std::size_t> index_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of indices");
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_number_unsigned()) throw ParseError(std::string(what) + " must hold non-negative integers");
    out.push_back(item.get<std::size_t>());
  }
  return out;
}

}  // namespace

Json to_json(const MassFunction& m) {
  Json masses = Json::array();
  for (const auto& [set, mass] : m.entries()) {
    Json focal = Json::array();
    for (auto x : set.members()) focal.push_back(m.frame().label(x));
    masses.push_back(Json{{"focal", std::move(focal)}, {"mass", mass}});
  }
  return Json{{"frame", frame_to_json(m.frame())}, {"masses", std::move(masses)}};
}

MassFunction mass_function_from_json(const Json& j) {
  Frame frame = frame_from_json(member(j, "frame"));
  const Json& masses = member(j, "masses");
  if (!masses.is_array()) throw ParseError("'masses' must be an array");
  std::vector<MassFunction::Entry> entries;
  std::set<FocalSet> seen;
  for (const auto& item : masses) {
    const auto labels = string_array(member(item, "focal"), "focal");
    if (labels.empty()) throw ParseError("empty focal set");
    FocalSet set;
    for (const auto& label : labels) {
      const FocalSet one = FocalSet::singleton(frame.index_of(label));
      if (!(set & one).empty()) throw ParseError("label '" + label + "' repeated in a focal set");
      set = set | one;
    }
    if (!seen.insert(set).second) throw ParseError("duplicate focal set in 'masses'");
    entries.emplace_back(set, number(member(item, "mass"), "mass"));
  }
  return MassFunction(std::move(frame), std::move(entries));
}

Json to_json(const RandomPermutationSet& mu) {
  Json pmf = Json::array();
  for (const auto& [event, mass] : mu.entries()) {
    Json seq = Json::array();
    for (auto x : event) seq.push_back(mu.frame().label(x));
    pmf.push_back(Json{{"event", std::move(seq)}, {"mass", mass}});
  }
  return Json{{"frame", frame_to_json(mu.frame())}, {"pmf", std::move(pmf)}};
}

RandomPermutationSet rps_from_json(const Json& j) {
  Frame frame = frame_from_json(member(j, "frame"));
  const Json& pmf = member(j, "pmf");
  if (!pmf.is_array()) throw ParseError("'pmf' must be an array");
  std::vector<RandomPermutationSet::Entry> entries;
  std::set<PermutationEvent> seen;
  for (const auto& item : pmf) {
    const auto labels = string_array(member(item, "event"), "event");
    if (labels.empty()) throw ParseError("empty permutation event");
    std::vector<std::size_t> seq;
    for (const auto& label : labels) seq.push_back(frame.index_of(label));
    PermutationEvent event;
    try {
      event = PermutationEvent(std::span<const std::size_t>(seq));
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("invalid permutation event: ") + e.what());
    }
    if (!seen.insert(event).second) throw ParseError("duplicate permutation event in 'pmf'");
    entries.emplace_back(event, number(member(item, "mass"), "mass"));
  }
  return RandomPermutationSet(std::move(frame), std::move(entries));
}

Json to_json(const ProbabilityDistribution& p) {
  Json out = Json::object();
  for (std::size_t i = 0; i < p.size(); ++i) out[p.frame().label(i)] = p[i];
  return out;
}

Json to_json(const ReliabilityReport& report) {
  return Json{{"dc", report.dc}, {"reliability", report.reliability}, {"fusion_order", report.fusion_order}};
}

ReliabilityReport reliability_report_from_json(const Json& j) {
  ReliabilityReport r;
  r.dc = number_array(member(j, "dc"), "dc");
  r.reliability = number_array(member(j, "reliability"), "reliability");
  r.fusion_order = index_array(member(j, "fusion_order"), "fusion_order");
  if (r.dc.size() != r.reliability.size() || r.fusion_order.size() != r.reliability.size()) {
    throw ParseError("reliability report arrays have different lengths");
  }
  for (double v : r.reliability) {
    if (!(v >= 0.0 && v <= 1.0)) throw ParseError("reliability values must lie in [0, 1]");
  }
  return r;
}

Json to_json(const AccuracyReport& report) {
  return Json{{"dataset", report.dataset},
              {"folds", report.folds},
              {"seed", report.seed},
              {"lambda", report.lambda},
              {"per_fold_accuracy", report.per_fold_accuracy},
              {"mean", report.mean},
              {"std", report.std},
              {"per_source_reliability", report.per_source_reliability}};
}

AccuracyReport accuracy_report_from_json(const Json& j) {
  AccuracyReport r;
  const Json& name = member(j, "dataset");
  if (!name.is_string()) throw ParseError("'dataset' must be a string");
  r.dataset = name.get<std::string>();
  const Json& folds = member(j, "folds");
  const Json& seed = member(j, "seed");
  if (!folds.is_number_unsigned() || !seed.is_number_unsigned()) {
    throw ParseError("'folds' and 'seed' must be non-negative integers");
  }
  r.folds = folds.get<std::size_t>();
  r.seed = seed.get<std::uint64_t>();
  r.lambda = number(member(j, "lambda"), "lambda");
  r.per_fold_accuracy = number_array(member(j, "per_fold_accuracy"), "per_fold_accuracy");
  r.mean = number(member(j, "mean"), "mean");
  r.std = number(member(j, "std"), "std");
  const Json& rel = member(j, "per_source_reliability");
  if (!rel.is_array()) throw ParseError("'per_source_reliability' must be an array");
  for (const auto& fold : rel) r.per_source_reliability.push_back(number_array(fold, "per_source_reliability"));
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text, bool force) {
  if (!force && std::filesystem::exists(path)) {
    throw Error("refusing to overwrite existing '" + path.string() + "' (use --force)");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out.flush()) throw Error("failed writing '" + path.string() + "'");
}

void write_report(const AccuracyReport& report, const std::filesystem::path& path, bool force) {
  write_text_file(path, dump(to_json(report)), force);
}

void write_report(const ReliabilityReport& report, const std::filesystem::path& path, bool force) {
  write_text_file(path, dump(to_json(report)), force);
}

AccuracyReport read_accuracy_report(const std::filesystem::path& path) {
  return accuracy_report_from_json(read_json_file(path));
}

ReliabilityReport read_reliability_report(const std::filesystem::path& path) {
  return reliability_report_from_json(read_json_file(path));
}

}  // namespace rps
