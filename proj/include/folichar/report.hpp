// Structured check records shared by the verification suites and the CLI.
#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace folichar {

struct CheckRecord {
    enum class Status { Pass, Fail, Skipped };

    std::string name;   // stable identifier, e.g. "weil.dh_eq_c"
    std::string params; // "q=2 i=1" and friends
    Status status = Status::Skipped;
    std::string value;  // value or witness text (may span lines)
    double runtime_sec = 0;
};

struct Report {
    std::vector<CheckRecord> records;

    bool all_passed() const;
    void append(const Report &other);
    std::string text() const; // one record per line, witnesses indented
    std::string json() const; // machine-readable summary
};

// Runs independent checks, optionally fanning out across threads; records
// are assembled in declaration order either way.  A nonempty selection
// restricts execution to the named checks (the rest are reported as
// skipped); unknown identifiers are rejected before any work starts.
class CheckRunner {
  public:
    explicit CheckRunner(bool serial, std::vector<std::string> selection = {})
        : serial_(serial), selection_(std::move(selection)) {}

    // fn returns (status, value/witness)
    using CheckFn = std::function<std::pair<CheckRecord::Status, std::string>()>;
    void add(std::string name, std::string params, CheckFn fn);

    Report run();

  private:
    bool serial_;
    std::vector<std::string> selection_;
    struct Pending {
        std::string name;
        std::string params;
        CheckFn fn;
    };
    std::vector<Pending> pending_;
};

// helpers for check bodies
std::pair<CheckRecord::Status, std::string> check_pass(std::string value = "");
std::pair<CheckRecord::Status, std::string> check_fail(std::string witness);
std::pair<CheckRecord::Status, std::string> check_bool(bool ok, std::string witness_on_fail = "");

} // namespace folichar
