#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schreier {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: non-bijective maps, alphabet clashes, bad voltages, bad words.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DisconnectedInput : public Error {
 public:
  using Error::Error;
};

// Raised by coset_count and exporters when a graph has undefined edges.
class IncompleteGraph : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t previous_count,
                  std::uint64_t last_count)
      : Error(what), previous_count_(previous_count), last_count_(last_count) {}

  std::uint64_t previous_count() const { return previous_count_; }
  std::uint64_t last_count() const { return last_count_; }

 private:
  std::uint64_t previous_count_;
  std::uint64_t last_count_;
};

}  // namespace schreier
