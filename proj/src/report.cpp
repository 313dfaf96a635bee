// SPDX-License-Identifier: Apache-2.0
#include "hexlat/report.hpp"

namespace hexlat {

std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::ExactZero: return "exact_zero";
        case CheckStatus::WithinTol: return "within_tol";
        case CheckStatus::Failed: return "failed";
    }
    return "failed";
}

std::size_t ConsistencyReport::count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& e : entries_)
        if (e.status == s) ++n;
    return n;
}

nlohmann::ordered_json ConsistencyReport::to_json() const {
    nlohmann::ordered_json summary;
    summary["total"] = total();
    summary["exact_zero"] = count(CheckStatus::ExactZero);
    summary["within_tol"] = count(CheckStatus::WithinTol);
    summary["failed"] = failed();

    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& e : entries_) {
        nlohmann::ordered_json j;
        j["id"] = e.id;
        j["status"] = check_status_name(e.status);
        j["residual"] = e.residual;
        if (!e.note.empty()) j["note"] = e.note;
        items.push_back(std::move(j));
    }

    nlohmann::ordered_json out;
    out["summary"] = std::move(summary);
    out["entries"] = std::move(items);
    return out;
}

}  // namespace hexlat
