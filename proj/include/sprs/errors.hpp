#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace sprs {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input token that is not an integer pointer label >= 2.
class MalformedToken : public Error {
 public:
  using Error::Error;
};

// A string in which some label does not occur exactly twice.
class NotLegal : public Error {
 public:
  using Error::Error;
};

// A queried label does not occur in the string / graph.
class LabelAbsent : public Error {
 public:
  using Error::Error;
};

// An operation that needs two distinct labels got the same one twice.
class SameLabel : public Error {
 public:
  using Error::Error;
};

// A graph violating the structural invariants of its type.
class MalformedGraph : public Error {
 public:
  using Error::Error;
};

// Restriction / reduction over an edge label the multigraph does not have.
class UnknownEdge : public Error {
 public:
  using Error::Error;
};

// merge applied to a loop or to an unknown edge.
class NotMergeable : public Error {
 public:
  using Error::Error;
};

// Edge ordering requested on a restriction that is not a rooted spanning tree.
class NotATree : public Error {
 public:
  using Error::Error;
};

// A reduction rule whose template does not match the given legal string.
// `rule_index` is the 0-based position of the failing rule when the error
// comes from applying a whole reduction.
class NotApplicable : public Error {
 public:
  NotApplicable(std::string rule_text, std::string input_text,
                std::optional<std::size_t> rule_index = std::nullopt)
      : Error(format(rule_text, input_text, rule_index)),
        rule_text_(std::move(rule_text)),
        input_text_(std::move(input_text)),
        rule_index_(rule_index) {}

  const std::string& rule_text() const noexcept { return rule_text_; }
  const std::string& input_text() const noexcept { return input_text_; }
  std::optional<std::size_t> rule_index() const noexcept { return rule_index_; }

 private:
  static std::string format(const std::string& rule, const std::string& input,
                            std::optional<std::size_t> index) {
    std::string msg = "rule " + rule + " is not applicable to \"" + input + "\"";
    if (index) msg += " (rule " + std::to_string(*index + 1) + " of the reduction)";
    return msg;
  }

  std::string rule_text_;
  std::string input_text_;
  std::optional<std::size_t> rule_index_;
};

}  // namespace sprs
