#pragma once

#include <stdexcept>
#include <string>

namespace ncse {

/// Malformed input: bad file contents, unknown events, violated invariants.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A reachability closure hit its configured state cap.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Channel operator applied to an empty queue.
class empty_channel_error : public std::logic_error {
public:
    explicit empty_channel_error(const std::string& what) : std::logic_error(what) {}
};

/// Loss applied past the consecutive-loss budget or out of range.
class loss_error : public std::logic_error {
public:
    explicit loss_error(const std::string& what) : std::logic_error(what) {}
};

/// An observation arrived that no augmented state in the estimate can explain.
class inconsistent_observation_error : public std::runtime_error {
public:
    explicit inconsistent_observation_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace ncse
