#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

enum class Errc {
    field_mismatch,       // operands live in different GF(2^e)
    division_by_zero,
    degree_mismatch,      // forms of unequal degree where equality is required
    all_zero,             // a 6-tuple of zero forms
    not_primitive,        // common factor among the coordinate forms
    not_on_fermat,        // sum of fifth powers does not vanish
    parse_error,
    generator_overflow,   // more minimal generators than the kernel rank allows
    bound_exceeded,       // generator search ran past its degree cap
    euler_section_missing,// (G0..G5) failed to lie in the extended kernel
    wrong_degree,
    trace_inconsistent,   // a refutation step failed to replay
    counterexample,       // a verdict that contradicts the bundled nonexistence facts
    degree_cap_exceeded,
    memory_budget,
    internal_error,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

/// Raised when a computation would disprove one of the shipped reference
/// facts (a free degree-4/5 curve, a very free curve in an excluded degree,
/// or a very free curve whose extended type has exactly one zero entry).
/// Deliberately loud: callers map it to a distinguished exit status.
class CounterexampleError : public Error {
  public:
    explicit CounterexampleError(const std::string& what)
        : Error(Errc::counterexample, what) {}
};

} // namespace fermat
