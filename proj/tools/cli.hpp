#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rpscli {

struct GlobalOptions {
  double lambda = 0.67;
  std::uint64_t seed = 42;
  std::size_t folds = 5;
  std::string out;
  bool force = false;
  int verbose = 0;
  bool json = false;
};

struct TransformArgs {
  std::string input;
};

struct FuseArgs {
  std::vector<std::string> inputs;
  std::string order = "left";
  std::string reliability;
};

struct ClassifyArgs {
  std::string dataset;
  std::string label_column;
  std::string method = "rps";
};

struct ReliabilityArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> truth;
  std::string dataset;
  std::string label_column;
};

int cmd_transform(const GlobalOptions& g, const TransformArgs& a, std::ostream& out, std::ostream& log);
int cmd_fuse(const GlobalOptions& g, const FuseArgs& a, std::ostream& out, std::ostream& log);
int cmd_classify(const GlobalOptions& g, const ClassifyArgs& a, std::ostream& out, std::ostream& log);
int cmd_reliability(const GlobalOptions& g, const ReliabilityArgs& a, std::ostream& out, std::ostream& log);
int cmd_examples(const GlobalOptions& g, std::ostream& out, std::ostream& log);

/// Left-aligned first column, right-aligned numeric columns.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// 6 significant digits.
std::string num(double v);

}  // namespace rpscli
