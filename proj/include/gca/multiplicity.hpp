#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "gca/error.hpp"

namespace gca {

// Edge multiplicity: a finite count >= 1 or omega (countably many parallel
// edges). A zero entry is not a multiplicity; absence of an entry means no
// edge.
class Multiplicity {
 public:
  static Multiplicity omega() { return Multiplicity(0); }

  static Multiplicity finite(std::uint64_t n) {
    if (n == 0) throw Error("finite multiplicity must be >= 1");
    return Multiplicity(n);
  }

  bool is_omega() const { return n_ == 0; }

  std::uint64_t count() const {
    if (is_omega()) throw Error("count() on omega multiplicity");
    return n_;
  }

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  explicit Multiplicity(std::uint64_t n) : n_(n) {}
  std::uint64_t n_;  // 0 encodes omega
};

// A vertex degree: a finite count >= 0 or omega.
class Degree {
 public:
  static Degree omega() { return Degree(true, 0); }
  static Degree of(std::uint64_t n) { return Degree(false, n); }

  bool is_omega() const { return omega_; }

  std::uint64_t count() const {
    if (omega_) throw Error("count() on omega degree");
    return n_;
  }

  bool is_zero() const { return !omega_ && n_ == 0; }
  bool is_finite_nonzero() const { return !omega_ && n_ > 0; }

  std::string to_string() const {
    return omega_ ? "omega" : std::to_string(n_);
  }

  friend bool operator==(const Degree&, const Degree&) = default;

 private:
  Degree(bool omega, std::uint64_t n) : omega_(omega), n_(n) {}
  bool omega_;
  std::uint64_t n_;
};

}  // namespace gca
