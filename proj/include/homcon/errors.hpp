#pragma once

#include <stdexcept>
#include <string>

namespace homcon {

// Bad user input: rejected before any computation starts (CLI exit code 1).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration exceeded its configured cap (CLI exit code 2).
// Aborted searches never return truncated answers; callers either propagate
// or record the trial as unknown.  For minimum-support searches, lower_bound
// carries the "answer is >= s" information established before the abort.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& what, long long lower_bound = -1)
        : std::runtime_error(what), lower_bound(lower_bound) {}
    long long lower_bound;
};

}  // namespace homcon
