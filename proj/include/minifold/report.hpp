#pragma once

// Reports produced by the command-line front end.
//
// A report is an ordered list of inputs, results and checks. The text form
// is for people; the machine form is one `key=value` per line in insertion
// order, so two runs with the same inputs produce identical bytes.

#include <string>
#include <vector>

namespace minifold {

enum class ReportFormat { Text, Machine };

/// Accepts "text" or "machine"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(const std::string& name);

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void input(std::string key, std::string value);
  void result(std::string key, std::string value);
  /// A multi-line value such as a matrix, one string per row.
  void table(std::string key, std::vector<std::string> rows);
  void check(std::string name, bool pass, std::string detail = {});
  /// What the command replays, e.g. "determinant identity for A_P".
  void anchor(std::string text);

  const std::string& command() const { return command_; }
  bool passed() const;
  std::size_t check_count() const { return checks_.size(); }
  std::size_t failed_count() const;
  /// 0 iff every check passed.
  int exit_code() const { return passed() ? 0 : 1; }

  /// Value of a result key, or empty if absent. Tables are joined with ';'.
  std::string value(const std::string& key) const;
  bool check_passed(const std::string& name) const;

  std::string render(ReportFormat format) const;

  /// Appends every entry of `other` with keys prefixed by `prefix` + ".".
  void merge(const Report& other, const std::string& prefix);

 private:
  enum class Kind { Input, Result, Table, Check, Anchor };
  struct Entry {
    Kind kind;
    std::string key;
    std::string value;
    std::vector<std::string> rows;
    bool pass = true;
  };

  std::string render_text() const;
  std::string render_machine() const;

  std::string command_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> checks_;
};

}  // namespace minifold
