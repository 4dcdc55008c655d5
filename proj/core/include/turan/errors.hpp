#ifndef TURAN_ERRORS_HPP
#define TURAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family builder rejected its parameters or coefficient table.
class ParamError : public Error {
 public:
  using Error::Error;
};

/// A family spec document could not be read.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// g_n = p_{n+1}(1)/p_n(1) became nonpositive; p_n(1) > 0 can no longer be tracked.
class NonpositiveRatio : public Error {
 public:
  explicit NonpositiveRatio(std::size_t index)
      : Error("nonpositive ratio p_{n+1}(1)/p_n(1) at n = " + std::to_string(index)), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Requested coefficient lies beyond a finite table.
class OutOfTable : public Error {
 public:
  OutOfTable(std::size_t index, std::size_t length)
      : Error("index " + std::to_string(index) + " beyond table of length " + std::to_string(length)), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// A rational intermediate exceeded the configured digit cap.
class RationalBlowUp : public Error {
 public:
  RationalBlowUp(std::size_t digits, std::size_t cap)
      : Error("rational intermediate has " + std::to_string(digits) + " digits (cap " + std::to_string(cap) + ")") {}
};

/// A family does not fit the corollary parametrization it was checked against.
class StructuralMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace turan

#endif  // TURAN_ERRORS_HPP
