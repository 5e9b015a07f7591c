#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <optional>
#include <ostream>

#include "cli.hpp"
#include "rps/classifier.hpp"
#include "rps/error.hpp"
#include "rps/json_io.hpp"
#include "rps/transform.hpp"

namespace rpscli {

using namespace rps;

std::string num(double v) { return fmt::format("{:.6g}", v); }

void Table::print(std::ostream& out) const {
  std::vector<std::size_t> width(header_.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  };
  widen(header_);
  for (const auto& r : rows_) widen(r);
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) s += "  ";
      s += c == 0 ? fmt::format("{:<{}}", row[c], width[c]) : fmt::format("{:>{}}", row[c], width[c]);
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line(header_);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& r : rows_) line(r);
}

namespace {

void print_rps(const RandomPermutationSet& mu, std::ostream& out) {
  Table t({"event", "mass"});
  for (const auto& [event, mass] : mu.entries()) t.add({to_string(event, mu.frame()), num(mass)});
  t.print(out);
}

void print_distribution(const ProbabilityDistribution& p, std::ostream& out) {
  Table t({"label", "probability"});
  for (std::size_t i = 0; i < p.size(); ++i) t.add({p.frame().label(i), num(p[i])});
  t.print(out);
}

void emit_rps(const GlobalOptions& g, const RandomPermutationSet& mu, const std::string& title,
              std::ostream& out, std::ostream& log) {
  const Dispersion dispersion(g.lambda);
  const auto rpt = ranked_probability_transform(mu, dispersion);
  if (g.json) {
    out << dump(Json{{"rps", to_json(mu)}, {"rpt", to_json(rpt)}});
  } else {
    out << title << '\n';
    print_rps(mu, out);
    out << "\nRanked probability transformation (lambda = " << num(g.lambda) << ")\n";
    print_distribution(rpt, out);
  }
  if (!g.out.empty()) {
    write_text_file(g.out, dump(to_json(mu)), g.force);
    if (g.verbose > 0) log << "wrote " << g.out << '\n';
  }
}

LabelColumn label_column(const std::string& text) {
  LabelColumn lc;
  if (text.empty()) return lc;
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    lc.index = std::stoul(text);
  } else {
    lc.name = text;
  }
  return lc;
}

std::vector<MassFunction> read_bpas(const std::string& path) {
  const Json j = read_json_file(path);
  std::vector<MassFunction> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(mass_function_from_json(item));
  } else {
    out.push_back(mass_function_from_json(j));
  }
  if (out.empty()) throw ParseError(path + ": no mass function");
  return out;
}

}  // namespace

int cmd_transform(const GlobalOptions& g, const TransformArgs& a, std::ostream& out, std::ostream& log) {
  const MassFunction m = mass_function_from_json(read_json_file(a.input));
  emit_rps(g, rps_transform(m), "Permutation mass function", out, log);
  return 0;
}

int cmd_fuse(const GlobalOptions& g, const FuseArgs& a, std::ostream& out, std::ostream& log) {
  std::vector<RandomPermutationSet> inputs;
  for (const auto& path : a.inputs) inputs.push_back(rps_from_json(read_json_file(path)));
  if (!a.reliability.empty()) {
    const ReliabilityReport rel = read_reliability_report(a.reliability);
    if (rel.reliability.size() != inputs.size()) {
      throw InvalidArgument("reliability file lists " + std::to_string(rel.reliability.size()) +
                            " sources for " + std::to_string(inputs.size()) + " inputs");
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      inputs[i] = discount_rps(inputs[i], rel.reliability[i]);
      if (g.verbose > 0) log << a.inputs[i] << ": discounted with R = " << num(rel.reliability[i]) << '\n';
    }
  }
  RandomPermutationSet fused = inputs.front();
  for (std::size_t i = 1; i < inputs.size(); ++i) {
    fused = a.order == "right" ? right_orthogonal_sum(fused, inputs[i]) : left_orthogonal_sum(fused, inputs[i]);
  }
  emit_rps(g, fused, a.order == "right" ? "Right orthogonal sum" : "Left orthogonal sum", out, log);
  return 0;
}

int cmd_classify(const GlobalOptions& g, const ClassifyArgs& a, std::ostream& out, std::ostream& log) {
  const Dataset ds = load_dataset(a.dataset, label_column(a.label_column));
  CrossValidationOptions opts;
  opts.folds = g.folds;
  opts.seed = g.seed;
  opts.dispersion = Dispersion(g.lambda);
  opts.method = a.method == "dempster" ? Method::kDempster : Method::kRps;

  const auto start = std::chrono::steady_clock::now();
  const AccuracyReport report = cross_validate(ds, opts);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  if (g.verbose > 0) log << "cross-validation took " << num(elapsed.count()) << " s\n";

  if (g.json) {
    out << dump(to_json(report));
  } else {
    out << fmt::format("dataset {}: {} samples, {} features, {} classes\n", ds.name, ds.samples(),
                       ds.feature_count(), ds.classes.size());
    out << fmt::format("method {}, {} folds, seed {}, lambda {}\n\n", a.method, g.folds, g.seed, num(g.lambda));
    if (!report.per_source_reliability.empty()) {
      std::vector<std::string> header{"feature"};
      for (std::size_t f = 0; f < report.per_source_reliability.size(); ++f) {
        header.push_back("R fold " + std::to_string(f + 1));
      }
      Table rel(header);
      for (std::size_t k = 0; k < ds.feature_count(); ++k) {
        std::vector<std::string> row{ds.feature_names[k]};
        for (const auto& fold : report.per_source_reliability) row.push_back(num(fold[k]));
        rel.add(std::move(row));
      }
      rel.print(out);
      out << '\n';
    }
    Table acc({"fold", "accuracy"});
    for (std::size_t f = 0; f < report.per_fold_accuracy.size(); ++f) {
      acc.add({std::to_string(f + 1), num(report.per_fold_accuracy[f])});
    }
    acc.print(out);
    out << fmt::format("\nmean accuracy {}  std {}\n", num(report.mean), num(report.std));
  }
  if (!g.out.empty()) {
    write_report(report, g.out, g.force);
    if (g.verbose > 0) log << "wrote " << g.out << '\n';
  }
  return 0;
}

int cmd_reliability(const GlobalOptions& g, const ReliabilityArgs& a, std::ostream& out, std::ostream& log) {
  const Dispersion dispersion(g.lambda);
  ReliabilityReport report;
  std::vector<std::string> names;
  if (!a.dataset.empty()) {
    if (!a.inputs.empty()) throw InvalidArgument("give either --dataset or BPA files, not both");
    const Dataset ds = load_dataset(a.dataset, label_column(a.label_column));
    report = train_rps_classifier(ds.features, ds.labels, ds.classes, dispersion).reliability;
    names = ds.feature_names;
  } else {
    if (a.inputs.empty()) throw InvalidArgument("no BPA files given");
    if (a.truth.empty()) throw InvalidArgument("--truth is required with BPA files");
    std::vector<SourceEvidence> sources;
    std::optional<Frame> frame;
    for (const auto& path : a.inputs) {
      SourceEvidence ev;
      for (auto& m : read_bpas(path)) {
        if (!frame) frame = m.frame();
        require_same_frame(*frame, m.frame(), "reliability");
        ev.emplace_back(std::move(m));
      }
      sources.push_back(std::move(ev));
    }
    const std::size_t samples = sources.front().size();
    std::vector<std::size_t> truths;
    for (const auto& label : a.truth) truths.push_back(frame->index_of(label));
    if (truths.size() == 1 && samples > 1) truths.assign(samples, truths.front());
    report = compute_reliabilities(sources, truths, dispersion);
    names = a.inputs;
  }

  if (g.json) {
    out << dump(to_json(report));
  } else {
    Table t({"source", "DC", "R"});
    for (std::size_t k = 0; k < report.dc.size(); ++k) {
      t.add({names[k], num(report.dc[k]), num(report.reliability[k])});
    }
    t.print(out);
    std::string order;
    for (auto k : report.fusion_order) order += (order.empty() ? "" : ", ") + names[k];
    out << "\nfusion order: " << order << '\n';
  }
  if (!g.out.empty()) {
    write_report(report, g.out, g.force);
    if (g.verbose > 0) log << "wrote " << g.out << '\n';
  }
  return 0;
}

}  // namespace rpscli
