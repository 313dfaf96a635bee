// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hexlat {

enum class CheckStatus { ExactZero, WithinTol, Failed };

std::string check_status_name(CheckStatus s);

struct CheckEntry {
    std::string id;
    CheckStatus status = CheckStatus::Failed;
    double residual = 0.0;  // 0 for exact checks that came out identically zero
    std::string note;
};

// Accumulates check outcomes.  Failures are recorded, never thrown: a report
// with failed() > 0 maps to a nonzero process exit, and the caller decides
// what to do with it.
class ConsistencyReport {
   public:
    void add(CheckEntry entry) { entries_.push_back(std::move(entry)); }

    void add_exact(const std::string& id, bool is_zero, const std::string& note = {}) {
        entries_.push_back({id, is_zero ? CheckStatus::ExactZero : CheckStatus::Failed,
                            is_zero ? 0.0 : 1.0, note});
    }

    void add_numeric(const std::string& id, double rel_residual, double tol,
                     const std::string& note = {}) {
        entries_.push_back({id, rel_residual <= tol ? CheckStatus::WithinTol : CheckStatus::Failed,
                            rel_residual, note});
    }

    void add_failure(const std::string& id, const std::string& note) {
        entries_.push_back({id, CheckStatus::Failed, 1.0, note});
    }

    const std::vector<CheckEntry>& entries() const { return entries_; }

    std::size_t total() const { return entries_.size(); }
    std::size_t count(CheckStatus s) const;
    std::size_t failed() const { return count(CheckStatus::Failed); }
    bool ok() const { return failed() == 0; }

    // Fixed key order; summary counts always equal the entry tally.
    nlohmann::ordered_json to_json() const;

    void merge(const ConsistencyReport& other) {
        entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    }

   private:
    std::vector<CheckEntry> entries_;
};

}  // namespace hexlat
