#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace l2v {

/// One failing instance of a condition: the basis/family tuple it failed on
/// and the exact residual (rendered with exact rationals; "0" never appears).
struct Witness {
    std::string at;
    std::string residual;
};

/// Outcome of one named condition, checked exhaustively over some finite
/// tuple set. `checked` counts tuples visited, `failed` counts failures;
/// `witnesses` keeps the first few failures in deterministic order.
struct CheckResult {
    std::string name;
    std::string label;
    bool pass = true;
    size_t checked = 0;
    size_t failed = 0;
    std::vector<Witness> witnesses;

    static constexpr size_t kMaxWitnesses = 8;

    void count(bool ok, const std::string& at, const std::string& residual) {
        ++checked;
        if (ok) return;
        pass = false;
        ++failed;
        if (witnesses.size() < kMaxWitnesses) witnesses.push_back({at, residual});
    }
};

/// Aggregated verification outcome; one CheckResult per condition.
/// `checks` is a deque so references handed out by add() stay valid while
/// later checks are appended.
struct VerifyReport {
    std::string subject;
    std::deque<CheckResult> checks;
    /// Informational derived values recorded alongside the checks
    /// (name, rendered value); they carry no pass/fail weight.
    std::vector<std::pair<std::string, std::string>> notes;
    unsigned long seed = 0;
    double elapsed_ms = 0.0;

    CheckResult& add(const std::string& name, const std::string& label) {
        checks.push_back(CheckResult{name, label});
        return checks.back();
    }

    void append(const VerifyReport& other) {
        for (const auto& c : other.checks) checks.push_back(c);
        for (const auto& n : other.notes) notes.push_back(n);
    }

    void note(const std::string& name, const std::string& value) {
        notes.emplace_back(name, value);
    }

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const CheckResult* find(const std::string& label) const {
        for (const auto& c : checks)
            if (c.label == label || c.name == label) return &c;
        return nullptr;
    }

    /// Human-readable rendering, one line per check plus witness lines.
    std::string text() const;
};

} // namespace l2v
