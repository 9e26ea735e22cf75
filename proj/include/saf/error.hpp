#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace saf {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input rejected while building a framework.
class ValidationError : public Error {
public:
    using Error::Error;
};

class InvalidName : public ValidationError {
public:
    explicit InvalidName(std::string name)
        : ValidationError("invalid argument name '" + name + "' (expected [A-Za-z0-9_]+)"),
          name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnknownArgument : public ValidationError {
public:
    explicit UnknownArgument(std::string name)
        : ValidationError("unknown argument '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// The subargument relation contains a cycle. `cycle()` lists the vertices
/// along the cycle with the first vertex repeated at the end.
class SubCycle : public ValidationError {
public:
    explicit SubCycle(std::vector<std::string> cycle);
    const std::vector<std::string>& cycle() const noexcept { return cycle_; }

private:
    std::vector<std::string> cycle_;
};

/// An attack (attacker, target) where the attacker also directly attacks a
/// proper subargument of the target.
class NonMinimalAttack : public ValidationError {
public:
    NonMinimalAttack(std::string attacker, std::string target, std::string subargument)
        : ValidationError("non-minimal attack " + attacker + " -> " + target + ": " + attacker +
                          " also attacks its proper subargument " + subargument),
          attacker_(std::move(attacker)),
          target_(std::move(target)),
          subargument_(std::move(subargument)) {}

    const std::string& attacker() const noexcept { return attacker_; }
    const std::string& target() const noexcept { return target_; }
    const std::string& subargument() const noexcept { return subargument_; }

private:
    std::string attacker_;
    std::string target_;
    std::string subargument_;
};

/// Subset enumeration would exceed the configured bound.
class InstanceTooLarge : public Error {
public:
    InstanceTooLarge(std::size_t size, std::size_t bound)
        : Error("instance of " + std::to_string(size) + " arguments exceeds enumeration bound " +
                std::to_string(bound)),
          size_(size),
          bound_(bound) {}
    std::size_t size() const noexcept { return size_; }
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t size_;
    std::size_t bound_;
};

class NotACoreSubset : public Error {
public:
    using Error::Error;
};

class NotAnExtension : public Error {
public:
    using Error::Error;
};

class NotAMember : public Error {
public:
    using Error::Error;
};

/// No local justification exists (only possible for sets that are not
/// closed under subarguments, e.g. some admissible sets).
class NoJustification : public Error {
public:
    using Error::Error;
};

}  // namespace saf
