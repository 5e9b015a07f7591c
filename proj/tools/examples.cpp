#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <ostream>

#include "cli.hpp"
#include "rps/dst.hpp"
#include "rps/json_io.hpp"
#include "rps/reliability.hpp"
#include "rps/transform.hpp"

namespace rpscli {

using namespace rps;

namespace {

const char* pass(bool ok) { return ok ? "PASS" : "FAIL"; }

// Reference distances of the mixed source against certainty on x1, one row
// per permutation event A of a three-label frame in canonical order.
struct DistanceRow {
  std::vector<std::string> a;
  double j;
  double rps;
};

const std::vector<DistanceRow>& reference_rows() {
  static const std::vector<DistanceRow> rows{
      {{"x1"}, 0.141, 0.036},
      {{"x2"}, 0.510, 0.436},
      {{"x3"}, 0.469, 0.327},
      {{"x1", "x2"}, 0.424, 0.109},
      {{"x1", "x3"}, 0.356, 0.082},
      {{"x2", "x1"}, 0.424, 0.364},
      {{"x2", "x3"}, 0.497, 0.327},
      {{"x3", "x1"}, 0.356, 0.273},
      {{"x3", "x2"}, 0.497, 0.327},
      {{"x1", "x2", "x3"}, 0.440, 0.092},
      {{"x1", "x3", "x2"}, 0.440, 0.092},
      {{"x2", "x1", "x3"}, 0.440, 0.275},
      {{"x2", "x3", "x1"}, 0.440, 0.316},
      {{"x3", "x1", "x2"}, 0.440, 0.275},
      {{"x3", "x2", "x1"}, 0.440, 0.316},
  };
  return rows;
}

RandomPermutationSet mixed_rps(const Frame& f, const std::vector<std::string>& a) {
  std::vector<std::pair<std::vector<std::string>, double>> entries{{{"x1"}, 0.4}, {{"x1", "x2"}, 0.2}};
  auto hit = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.first == a; });
  if (hit != entries.end()) {
    hit->second += 0.4;
  } else {
    entries.emplace_back(a, 0.4);
  }
  return RandomPermutationSet::from_labels(f, entries);
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + ")";
}

struct SweepPoint {
  double eta;
  ReliabilityReport report;
};

std::vector<SweepPoint> sweep(const Frame& f, bool compound, Dispersion dispersion) {
  const auto star = MassFunction::from_labels(f, {{{"x1"}, 1.0}});
  const auto m2 = MassFunction::from_labels(f, {{{"x2", "x3"}, 1.0}});
  const std::vector<std::size_t> truth{0};
  std::vector<SweepPoint> out;
  for (int step = 0; step <= 70; ++step) {
    const double eta = step / 100.0;
    // 0.7 - eta goes slightly negative through rounding at the top end
    const double rest = std::max(0.0, 0.7 - eta);
    const auto m1 = compound ? MassFunction::from_labels(f, {{{"x1"}, 0.1},
                                                              {{"x3"}, eta},
                                                              {{"x2", "x3"}, rest},
                                                              {{"x1", "x2", "x3"}, 0.2}})
                             : MassFunction::from_labels(f, {{{"x1"}, eta},
                                                              {{"x3"}, rest},
                                                              {{"x2", "x3"}, 0.2},
                                                              {{"x1", "x2", "x3"}, 0.1}});
    const std::vector<SourceEvidence> sources{SourceEvidence{m1}, SourceEvidence{star}, SourceEvidence{m2}};
    out.push_back({eta, compute_reliabilities(sources, truth, dispersion)});
  }
  return out;
}

void print_sweep(const std::vector<SweepPoint>& points, std::ostream& out) {
  out << "eta,r_m1,r_mstar,r_m2\n";
  for (const auto& p : points) {
    const auto& r = p.report.reliability;
    out << fmt::format("{:.2f},{},{},{}\n", p.eta, num(r[0]), num(r[1]), num(r[2]));
  }
}

double spread(const std::vector<SweepPoint>& points) {
  double lo = 2.0, hi = -1.0;
  for (const auto& p : points) {
    lo = std::min(lo, p.report.reliability[0]);
    hi = std::max(hi, p.report.reliability[0]);
  }
  return hi - lo;
}

}  // namespace

int cmd_examples(const GlobalOptions& g, std::ostream& out, std::ostream& log) {
  const Dispersion dispersion(g.lambda);
  const Frame dna{"D", "N", "A"};

  out << "== Internal order rankings over {D,N,A} (0 marks an empty slot)\n";
  {
    Table t({"event", "beta1", "beta2", "beta3"});
    for (const auto& event : {PermutationEvent{0, 1}, PermutationEvent{2, 1, 0}, PermutationEvent{1}}) {
      std::vector<std::string> row{to_string(event, dna)};
      for (const auto& slot : internal_order_ranking(event, dna)) row.push_back(slot ? dna.label(*slot) : "0");
      t.add(std::move(row));
    }
    t.print(out);
  }

  out << "\n== Ordered support degree under BetP = (D 0.2, N 0.3, A 0.5)\n";
  {
    const ProbabilityDistribution betp(dna, {0.2, 0.3, 0.5});
    Table t({"event", "Sord"});
    for (const auto& event : {PermutationEvent{1, 0}, PermutationEvent{2, 0, 1}}) {
      t.add({to_string(event, dna), num(ordered_support(event, betp))});
    }
    t.print(out);
  }

  out << "\n== BPA to RPS transformation\n";
  {
    const auto m = MassFunction::from_labels(
        dna, {{{"D"}, 0.1}, {{"N"}, 0.2}, {{"A"}, 0.2}, {{"N", "A"}, 0.2}, {{"D", "N", "A"}, 0.3}});
    const auto mu = rps_transform(m);
    Table t({"event", "mass"});
    for (const auto& [event, mass] : mu.entries()) t.add({to_string(event, dna), num(mass)});
    t.print(out);
  }

  out << "\n== J distance and RPS distance to certainty on x1, lambda = " << num(g.lambda) << "\n";
  out << "source: (x1) 0.4, (x1,x2) 0.2, A 0.4\n";
  const Frame three{"x1", "x2", "x3"};
  const auto star = RandomPermutationSet::from_labels(three, {{{"x1"}, 1.0}});
  std::vector<double> ours;
  {
    Table t({"A", "J", "J ref", "RPS distance", "RPS ref"});
    for (const auto& row : reference_rows()) {
      const auto mu = mixed_rps(three, row.a);
      const double j = jousselme_distance(mu.order_erased(), star.order_erased());
      const double d = rpt_distance(mu, star, dispersion);
      ours.push_back(d);
      t.add({join(row.a), fmt::format("{:.3f}", j), fmt::format("{:.3f}", row.j), fmt::format("{:.4f}", d),
             fmt::format("{:.3f}", row.rps)});
    }
    t.print(out);
  }
  {
    const auto& rows = reference_rows();
    auto idx = [&](std::vector<std::string> a) {
      return static_cast<std::size_t>(
          std::find_if(rows.begin(), rows.end(), [&](const DistanceRow& r) { return r.a == a; }) - rows.begin());
    };
    auto d = [&](std::vector<std::string> a) { return ours[idx(std::move(a))]; };
    const bool equal = std::abs(d({"x1", "x2", "x3"}) - d({"x1", "x3", "x2"})) <= 1e-12 &&
                       std::abs(d({"x2", "x1", "x3"}) - d({"x3", "x1", "x2"})) <= 1e-12 &&
                       std::abs(d({"x2", "x3", "x1"}) - d({"x3", "x2", "x1"})) <= 1e-12 &&
                       std::abs(d({"x2", "x3"}) - d({"x3", "x2"})) <= 1e-12;
    const bool groups = d({"x1", "x2", "x3"}) < d({"x2", "x1", "x3"}) &&
                        d({"x2", "x1", "x3"}) < d({"x2", "x3", "x1"}) && d({"x2", "x3", "x1"}) < d({"x2", "x3"});
    int agree = 0, tied = 0, total = 0;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = a + 1; b < rows.size(); ++b) {
        if (rows[a].rps == rows[b].rps) continue;
        ++total;
        if (std::abs(ours[a] - ours[b]) <= 1e-12) {
          ++tied;
        } else if ((rows[a].rps < rows[b].rps) == (ours[a] < ours[b])) {
          ++agree;
        }
      }
    }
    out << "equality pairs: " << pass(equal) << '\n';
    out << "triple group ordering: " << pass(groups) << '\n';
    out << fmt::format("strictly ordered reference row pairs: {} reproduced, {} tied, {} reversed, of {}\n", agree,
                       tied, total - agree - tied, total);
  }

  const auto singleton = sweep(three, false, dispersion);
  const auto compound = sweep(three, true, dispersion);
  out << "\n== Reliability sweep, m1 = {x1: eta, x3: 0.7-eta, (x2,x3): 0.2, (x1,x2,x3): 0.1}\n";
  print_sweep(singleton, out);
  out << "\n== Reliability sweep, m1 = {x1: 0.1, x3: eta, (x2,x3): 0.7-eta, (x1,x2,x3): 0.2}\n";
  print_sweep(compound, out);

  bool monotone = true;
  for (std::size_t i = 0; i < singleton.size(); ++i) {
    const auto& r = singleton[i].report.reliability;
    if (r[1] != 1.0 || r[2] != 0.0) monotone = false;
    if (i > 0 && r[0] < singleton[i - 1].report.reliability[0]) monotone = false;
  }
  const double s1 = spread(singleton), s2 = spread(compound);
  out << "\nfirst sweep: R(m1) nondecreasing, R(m*) = 1, R(m2) = 0: " << pass(monotone) << '\n';
  out << fmt::format("second sweep flatter (range {} < {}): {}\n", num(s2), num(s1), pass(s2 < s1));

  if (!g.out.empty()) {
    std::string csv = "eta,r_m1_first,r_m1_second\n";
    for (std::size_t i = 0; i < singleton.size(); ++i) {
      csv += fmt::format("{:.2f},{},{}\n", singleton[i].eta, singleton[i].report.reliability[0],
                         compound[i].report.reliability[0]);
    }
    write_text_file(g.out, csv, g.force);
    if (g.verbose > 0) log << "wrote " << g.out << '\n';
  }
  return 0;
}

}  // namespace rpscli
