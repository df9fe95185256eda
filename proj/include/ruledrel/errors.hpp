#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ruledrel {

// Malformed input text (expressions, scenario files). `offset` is the byte
// position of the offending character, or npos when not applicable.
class ParseError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ParseError(std::string message, std::size_t offset = npos)
      : std::runtime_error(offset == npos
                               ? message
                               : message + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Evaluation outside the mathematical domain: log of a non-positive value,
// division by zero, parameter outside the configured interval, and so on.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// q(u,v) = 0 where a relative normalization requires q != 0.
class ZeroSupport : public DomainError {
 public:
  using DomainError::DomainError;
};

// An ingredient function (g, f, f+gv, ...) vanishes on the working domain.
class VanishingIngredient : public DomainError {
 public:
  using DomainError::DomainError;
};

// A builder that requires kappa == 0 got a non-conoidal surface, or vice versa.
class NotConoidal : public DomainError {
 public:
  using DomainError::DomainError;
};
class ConoidalSurface : public DomainError {
 public:
  using DomainError::DomainError;
};

// delta g' - kappa f vanishes somewhere but not everywhere: the relative image
// is neither a curve nor a ruled surface with parallel generators.
class MixedImageType : public DomainError {
 public:
  using DomainError::DomainError;
};

// g' == 0: relative minimal central normalization, focal curve undefined.
class RelativeMinimal : public DomainError {
 public:
  using DomainError::DomainError;
};

// kappa' == 0: striction curve of the Darboux-direction surface undefined.
class StationaryKappa : public DomainError {
 public:
  using DomainError::DomainError;
};

// v == 0 where a central-normalization quantity has a pole.
class ZeroV : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ruledrel
