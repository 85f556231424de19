#pragma once

#include <stdexcept>
#include <string>

namespace mconvex {

// Bad caller input: out-of-range ids, a sequence that is not a path, a set
// that is not a maximal clique.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed instance text. Carries the 1-based line number (0 when the
// problem is not tied to a line, e.g. a missing header).
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// The input is well formed but outside the domain of the algorithm
// (typically: the graph is not chordal).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exponential reference procedure was asked to run above its size guard.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A flow network whose minimum cut crosses an infinite-capacity arc.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant. Never expected; surfaced loudly instead of
// returning a possibly wrong answer.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mconvex
