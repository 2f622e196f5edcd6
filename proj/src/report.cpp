#include "folichar/report.hpp"

#include "json.hpp"

#include <future>
#include <sstream>

namespace folichar {

bool Report::all_passed() const {
    for (const CheckRecord &r : records)
        if (r.status == CheckRecord::Status::Fail) return false;
    return true;
}

void Report::append(const Report &other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
}

namespace {
const char *status_str(CheckRecord::Status s) {
    switch (s) {
    case CheckRecord::Status::Pass: return "pass";
    case CheckRecord::Status::Fail: return "FAIL";
    case CheckRecord::Status::Skipped: return "skipped";
    }
    return "?";
}
} // namespace

std::string Report::text() const {
    std::ostringstream os;
    for (const CheckRecord &r : records) {
        os << "check " << r.name;
        if (!r.params.empty()) os << " [" << r.params << "]";
        os << " status=" << status_str(r.status);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", r.runtime_sec);
        os << " time=" << buf << "s";
        if (!r.value.empty()) {
            if (r.value.find('\n') == std::string::npos) {
                os << " value=" << r.value;
            } else {
                os << "\n";
                std::istringstream lines(r.value);
                std::string line;
                while (std::getline(lines, line)) os << "    | " << line << "\n";
                continue;
            }
        }
        os << "\n";
    }
    size_t pass = 0, fail = 0, skip = 0;
    for (const CheckRecord &r : records) {
        if (r.status == CheckRecord::Status::Pass) ++pass;
        if (r.status == CheckRecord::Status::Fail) ++fail;
        if (r.status == CheckRecord::Status::Skipped) ++skip;
    }
    os << "summary: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    return os.str();
}

std::string Report::json() const {
    nlohmann::json j;
    j["records"] = nlohmann::json::array();
    for (const CheckRecord &r : records) {
        nlohmann::json rec;
        rec["name"] = r.name;
        rec["params"] = r.params;
        rec["status"] = status_str(r.status);
        rec["value"] = r.value;
        rec["runtime_sec"] = r.runtime_sec;
        j["records"].push_back(rec);
    }
    j["all_passed"] = all_passed();
    return j.dump(2);
}

void CheckRunner::add(std::string name, std::string params, CheckFn fn) {
    pending_.push_back({std::move(name), std::move(params), std::move(fn)});
}

Report CheckRunner::run() {
    // validate the selection before any check executes
    std::vector<bool> enabled(pending_.size(), true);
    if (!selection_.empty()) {
        enabled.assign(pending_.size(), false);
        for (const std::string &want : selection_) {
            bool found = false;
            for (size_t i = 0; i < pending_.size(); ++i)
                if (pending_[i].name == want) {
                    enabled[i] = true;
                    found = true;
                }
            if (!found) throw std::invalid_argument("unknown check identifier '" + want + "'");
        }
    }

    Report rep;
    rep.records.resize(pending_.size());
    auto run_one = [&](size_t i) {
        CheckRecord &rec = rep.records[i];
        rec.name = pending_[i].name;
        rec.params = pending_[i].params;
        if (!enabled[i]) {
            rec.status = CheckRecord::Status::Skipped;
            rec.value = "not selected";
            return;
        }
        auto start = std::chrono::steady_clock::now();
        try {
            auto [status, value] = pending_[i].fn();
            rec.status = status;
            rec.value = std::move(value);
        } catch (const std::exception &e) {
            rec.status = CheckRecord::Status::Fail;
            rec.value = std::string("exception: ") + e.what();
        }
        rec.runtime_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    if (serial_) {
        for (size_t i = 0; i < pending_.size(); ++i) run_one(i);
    } else {
        std::vector<std::future<void>> futures;
        futures.reserve(pending_.size());
        for (size_t i = 0; i < pending_.size(); ++i)
            futures.push_back(std::async(std::launch::async, run_one, i));
        for (auto &f : futures) f.get();
    }
    return rep;
}

std::pair<CheckRecord::Status, std::string> check_pass(std::string value) {
    return {CheckRecord::Status::Pass, std::move(value)};
}

std::pair<CheckRecord::Status, std::string> check_fail(std::string witness) {
    return {CheckRecord::Status::Fail, std::move(witness)};
}

std::pair<CheckRecord::Status, std::string> check_bool(bool ok, std::string witness_on_fail) {
    if (ok) return check_pass();
    return check_fail(std::move(witness_on_fail));
}

} // namespace folichar
