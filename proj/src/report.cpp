#include "minifold/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace minifold {
namespace {

std::string join(const std::vector<std::string>& rows, char sep) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out.push_back(sep);
    out += rows[i];
  }
  return out;
}

// Machine values must stay on one line.
std::string flatten(const std::string& s) {
  std::string out = s;
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "machine") return ReportFormat::Machine;
  throw std::invalid_argument("unknown report format '" + name + "' (expected text or machine)");
}

void Report::input(std::string key, std::string value) {
  entries_.push_back({Kind::Input, std::move(key), std::move(value), {}, true});
}

void Report::result(std::string key, std::string value) {
  entries_.push_back({Kind::Result, std::move(key), std::move(value), {}, true});
}

void Report::table(std::string key, std::vector<std::string> rows) {
  entries_.push_back({Kind::Table, std::move(key), {}, std::move(rows), true});
}

void Report::check(std::string name, bool pass, std::string detail) {
  checks_.push_back(entries_.size());
  entries_.push_back({Kind::Check, std::move(name), std::move(detail), {}, pass});
}

void Report::anchor(std::string text) { entries_.push_back({Kind::Anchor, {}, std::move(text), {}, true}); }

bool Report::passed() const { return failed_count() == 0; }

std::size_t Report::failed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [&](std::size_t i) { return !entries_[i].pass; }));
}

std::string Report::value(const std::string& key) const {
  for (const auto& e : entries_) {
    if (e.key != key) continue;
    if (e.kind == Kind::Result) return e.value;
    if (e.kind == Kind::Table) return join(e.rows, ';');
  }
  return {};
}

bool Report::check_passed(const std::string& name) const {
  for (std::size_t i : checks_)
    if (entries_[i].key == name) return entries_[i].pass;
  return false;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& e : other.entries_) {
    Entry copy = e;
    if (copy.kind != Kind::Anchor) copy.key = prefix + "." + copy.key;
    if (copy.kind == Kind::Check) checks_.push_back(entries_.size());
    entries_.push_back(std::move(copy));
  }
}

std::string Report::render(ReportFormat format) const {
  return format == ReportFormat::Text ? render_text() : render_machine();
}

std::string Report::render_machine() const {
  std::ostringstream out;
  out << "command=" << command_ << '\n';
  std::size_t anchors = 0;
  for (const auto& e : entries_) {
    switch (e.kind) {
      case Kind::Input: out << "input." << e.key << '=' << flatten(e.value) << '\n'; break;
      case Kind::Result: out << "result." << e.key << '=' << flatten(e.value) << '\n'; break;
      case Kind::Table: out << "result." << e.key << '=' << flatten(join(e.rows, ';')) << '\n'; break;
      case Kind::Check:
        out << "check." << e.key << '=' << (e.pass ? "PASS" : "FAIL") << '\n';
        if (!e.value.empty()) out << "check." << e.key << ".detail=" << flatten(e.value) << '\n';
        break;
      case Kind::Anchor: out << "anchor." << anchors++ << '=' << flatten(e.value) << '\n'; break;
    }
  }
  out << "checks.total=" << checks_.size() << '\n';
  out << "checks.failed=" << failed_count() << '\n';
  out << "verdict=" << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string Report::render_text() const {
  std::ostringstream out;
  out << "== " << command_ << " ==\n";
  for (const auto& e : entries_) {
    switch (e.kind) {
      case Kind::Input: out << "  input   " << e.key << ": " << e.value << '\n'; break;
      case Kind::Result: out << "  " << e.key << ": " << e.value << '\n'; break;
      case Kind::Table:
        out << "  " << e.key << ":\n";
        for (const auto& row : e.rows) out << "      " << row << '\n';
        break;
      case Kind::Check:
        out << "  [" << (e.pass ? "PASS" : "FAIL") << "] " << e.key;
        if (!e.value.empty()) out << "  (" << e.value << ')';
        out << '\n';
        break;
      case Kind::Anchor: out << "  replays: " << e.value << '\n'; break;
    }
  }
  out << "verdict: " << (passed() ? "PASS" : "FAIL") << " (" << (checks_.size() - failed_count()) << '/'
      << checks_.size() << " checks)\n";
  return out.str();
}

}  // namespace minifold
