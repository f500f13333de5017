#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "moonshine/bigint.hpp"

namespace moonshine {

enum class Status { verified, failed, rejected };

std::string to_string(Status s);

struct Mismatch {
    std::vector<long> at;  // exponent tuple, e.g. {n} or {m, n}
    std::string lhs;       // exact decimal strings, never floating
    std::string rhs;
};

// Uniform outcome of an identity check. `failed` iff a mismatch is
// present; `checked` counts the coefficients/values actually compared.
struct VerificationReport {
    std::string identity;
    std::string window;
    Status status = Status::rejected;
    std::optional<Mismatch> first_mismatch;
    long checked = 0;
    long elapsed_ms = 0;

    std::string to_text() const;
    std::string to_json() const;  // schema-exact, see README
};

// All verified -> verified; otherwise the first non-verified report (in
// order) supplies status and mismatch. checked and elapsed_ms are summed.
// Empty input is rejected.
VerificationReport merge(const std::vector<VerificationReport>& reports);

// Small helper for timing verifier bodies.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long elapsed_ms() const {
        return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start_)
                                     .count());
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace moonshine
