#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bfgame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A contracted graph (or reserve union) has no spanning tree.
class Disconnected : public Error {
 public:
  using Error::Error;
};

class NotSpanningTree : public Error {
 public:
  using Error::Error;
};

/// (G - B) + R is disconnected: no reserve spending can reconnect.
class BusterWins : public Error {
 public:
  using Error::Error;
};

class IllegalMove : public Error {
 public:
  using Error::Error;
};

class PolicyError : public Error {
 public:
  PolicyError(std::size_t round, const std::string& what)
      : Error("round " + std::to_string(round) + ": " + what), round_(round) {}
  std::size_t round() const { return round_; }

 private:
  std::size_t round_;
};

/// Two routes to the same quantity disagreed. Always an engine bug.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace bfgame
