#include "moonshine/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace moonshine {

std::string to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::failed: return "failed";
        case Status::rejected: return "rejected";
    }
    return "unknown";
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "identity: " << identity << "  window: " << window << "  status: " << to_string(status)
        << "  checked: " << checked << "  elapsed_ms: " << elapsed_ms;
    if (first_mismatch) {
        out << "\n  first mismatch at (";
        for (size_t i = 0; i < first_mismatch->at.size(); ++i) {
            if (i) out << ", ";
            out << first_mismatch->at[i];
        }
        out << "): lhs = " << first_mismatch->lhs << ", rhs = " << first_mismatch->rhs;
    }
    return out.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["window"] = window;
    j["status"] = to_string(status);
    if (first_mismatch) {
        nlohmann::ordered_json m;
        m["at"] = first_mismatch->at;
        m["lhs"] = first_mismatch->lhs;
        m["rhs"] = first_mismatch->rhs;
        j["first_mismatch"] = m;
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["checked"] = checked;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

VerificationReport merge(const std::vector<VerificationReport>& reports) {
    if (reports.empty()) {
        throw std::invalid_argument("merge: empty report sequence");
    }
    VerificationReport out;
    out.identity = "all";
    out.status = Status::verified;
    std::ostringstream window;
    window << reports.size() << " checks";
    out.window = window.str();
    for (const auto& r : reports) {
        out.checked += r.checked;
        out.elapsed_ms += r.elapsed_ms;
        if (out.status == Status::verified && r.status != Status::verified) {
            out.status = r.status;
            out.first_mismatch = r.first_mismatch;
            out.window = r.identity + " (" + r.window + ")";
        }
    }
    return out;
}

}  // namespace moonshine
