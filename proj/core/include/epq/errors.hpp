#pragma once

#include <stdexcept>

namespace epq {

// Precondition violated by the caller (bad prime, zero denominator, ...).
class DomainError : public std::domain_error {
  using std::domain_error::domain_error;
};

// A witness whose discriminant a^4 + 4pqb^4 is not a perfect square.
class InvalidWitness : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Persisted scan report failed to parse or its checksum does not match.
class CorruptReport : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class AnalysisError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace epq
