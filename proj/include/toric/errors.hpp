#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Input data that cannot be interpreted (malformed JSON, wrong shapes,
/// out-of-range indices).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (non-Fano fan passed to
/// pseudo_index, divisorial blow-up center, zero vector, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fan geometry contradicts the smooth complete fan model (a wall with the
/// wrong number of neighbours, a non-unimodular cone met during analysis).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace toric
