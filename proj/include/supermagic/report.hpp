#ifndef SUPERMAGIC_REPORT_HPP
#define SUPERMAGIC_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace supermagic {

enum class Status { pass, fail, inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "fail";
}

/// Outcome of one check. A failing report always carries at least one witness.
struct Report {
  std::string check;
  Status status = Status::pass;
  std::vector<std::string> witnesses;
  double seconds = 0.0;
  std::uint64_t seed = 0;
  std::string dims;
  std::vector<std::pair<std::string, std::string>> details;

  bool passed() const { return status == Status::pass; }

  /// Records a witness and marks the report failed. Witness lists are capped.
  void fail(std::string witness) {
    status = Status::fail;
    if (witnesses.size() < 16) witnesses.push_back(std::move(witness));
  }
  void note(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
  /// One line per witness after a header line.
  std::string render() const {
    std::string out = std::string(to_string(status)) + "  " + check;
    if (!dims.empty()) out += "  " + dims;
    for (const auto& w : witnesses) out += "\n  " + w;
    return out;
  }
  void absorb(const Report& other) {
    if (!other.passed()) {
      if (status == Status::pass) status = other.status;
      for (const auto& w : other.witnesses) fail(other.check + ": " + w);
      if (other.status == Status::inconclusive && other.witnesses.empty())
        status = Status::inconclusive;
    }
  }
};

/// Stamps elapsed wall time into a report when it goes out of scope.
class ReportTimer {
 public:
  explicit ReportTimer(Report& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  Report& r_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace supermagic

#endif  // SUPERMAGIC_REPORT_HPP
