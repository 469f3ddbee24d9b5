#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

namespace minsec {

enum class CheckStatus { Pass, Fail, Flagged };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "flagged";
    }
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    double millis = 0;
};

// Result of one batch command: per-check status plus a structured payload.
// A flagged check is informational and does not fail the run. Timings are
// reported in the text rendering only, so identical invocations stay
// byte-identical in JSON.
struct RunReport {
    std::string command;
    std::vector<CheckResult> checks;
    nlohmann::json payload = nlohmann::json::object();

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["schema"] = 1;
        j["command"] = command;
        j["ok"] = ok();
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json cj;
            cj["name"] = c.name;
            cj["status"] = to_string(c.status);
            if (!c.detail.empty()) cj["detail"] = c.detail;
            arr.push_back(cj);
        }
        j["checks"] = arr;
        j["payload"] = payload;
        return j;
    }

    std::string to_text() const {
        std::string out = "# " + command + "\n";
        for (const auto& c : checks) {
            out += "[" + to_string(c.status) + "] " + c.name;
            if (!c.detail.empty()) out += ": " + c.detail;
            char buf[32];
            std::snprintf(buf, sizeof(buf), " (%.1f ms)", c.millis);
            out += buf;
            out += "\n";
        }
        if (!payload.empty()) out += payload.dump(2) + "\n";
        out += ok() ? "OK\n" : "FAILED\n";
        return out;
    }
};

// Runs independent checks, optionally across threads; results keep the
// submission order regardless of the thread count.
class CheckRunner {
public:
    void add(std::string name, std::function<std::pair<CheckStatus, std::string>()> fn) {
        names_.push_back(std::move(name));
        fns_.push_back(std::move(fn));
    }

    std::vector<CheckResult> run(int jobs) const {
        std::vector<CheckResult> results(fns_.size());
        auto work = [&](std::size_t i) {
            auto start = std::chrono::steady_clock::now();
            CheckResult r;
            r.name = names_[i];
            try {
                auto [status, detail] = fns_[i]();
                r.status = status;
                r.detail = std::move(detail);
            } catch (const std::exception& e) {
                r.status = CheckStatus::Fail;
                r.detail = std::string("exception: ") + e.what();
            }
            r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            results[i] = std::move(r);
        };
        if (jobs <= 1) {
            for (std::size_t i = 0; i < fns_.size(); ++i) work(i);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            int count = std::min<int>(jobs, static_cast<int>(fns_.size()));
            for (int t = 0; t < count; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= fns_.size()) return;
                        work(i);
                    }
                });
            for (auto& t : pool) t.join();
        }
        return results;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::function<std::pair<CheckStatus, std::string>()>> fns_;
};

inline std::pair<CheckStatus, std::string> check_bool(bool ok, std::string detail = "") {
    return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

}  // namespace minsec
