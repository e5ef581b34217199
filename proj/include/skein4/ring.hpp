#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein4/bigint.hpp"

namespace skein4 {

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One signed exponent per ring variable.
using Exponents = std::vector<int>;

// Graded lexicographic: total degree first, then the exponent vector in
// declared variable order. Gives deterministic term order for text output.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

using TermMap = std::map<Exponents, Int, GrlexLess>;

// A commutative ring Z[v1,...,vk] with
//   - a subset of Laurent (invertible) variables,
//   - rewrite rules "v^p -> rhs" with deg_v(rhs) < p (e.g. a^4 -> 1),
//   - an optional integer modulus on coefficients.
// Rewriting strictly reduces the exponent of the rule variable, so
// normalization terminates; canonical forms are unique.
class RingSpec {
 public:
  struct PowerRule {
    int var = -1;
    int power = 0;
    TermMap rhs;
    bool unit_rhs = false;  // rhs == 1: exponents reduce mod power, negatives allowed
  };

  static std::shared_ptr<const RingSpec> create(std::vector<std::string> vars,
                                                std::vector<std::string> laurent,
                                                Int modulus = 0);
  // Same, plus a single power rule var^power -> rhs_constant (must be +-1 for
  // the variable to be invertible through the rule).
  static std::shared_ptr<const RingSpec> create_with_power_rule(
      std::vector<std::string> vars, std::vector<std::string> laurent,
      const std::string& rule_var, int power, Int rhs_constant, Int modulus = 0);

  int nvars() const { return int(vars_.size()); }
  int var_index(const std::string& name) const;         // -1 if absent
  int require_var(const std::string& name) const;       // throws if absent
  const std::string& var_name(int i) const { return vars_[size_t(i)]; }
  bool invertible(int i) const;
  const Int& modulus() const { return modulus_; }
  const PowerRule* rule_for(int var) const;
  bool same_as(const RingSpec& other) const;

 private:
  std::vector<std::string> vars_;
  std::vector<bool> laurent_;
  std::vector<PowerRule> rules_;
  Int modulus_ = 0;
  friend class RingElement;
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

// Immutable multivariate Laurent polynomial over Z in canonical form: no zero
// coefficients, exponents fully reduced modulo the spec's rules, coefficients
// reduced into [0, m) when an integer modulus m is set.
class RingElement {
 public:
  RingElement() = default;  // invalid placeholder; any use throws

  static RingElement zero(RingSpecPtr spec);
  static RingElement one(RingSpecPtr spec);
  static RingElement integer(RingSpecPtr spec, Int c);
  static RingElement variable(RingSpecPtr spec, const std::string& name, int exp = 1);
  static RingElement monomial(RingSpecPtr spec, Int c,
                              const std::vector<std::pair<std::string, int>>& pows);
  // Normalizes a raw term map. Rejects negative exponents on non-invertible
  // variables.
  static RingElement normalized(RingSpecPtr spec, const TermMap& raw);

  bool valid() const { return spec_ != nullptr; }
  const RingSpecPtr& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
  bool operator==(const RingElement& o) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  RingElement scaled(const Int& c) const;
  // Integer power; negative exponents require a unit (single invertible term).
  RingElement pow(long e) const;
  // Inverse of a unit monomial (coefficient +-1, or any unit when a modulus
  // is set; all variables invertible). nullopt when not such a unit.
  std::optional<RingElement> unit_inverse() const;
  // Exact division in the Laurent ring; nullopt when the quotient does not
  // exist as a ring element.
  static std::optional<RingElement> exact_div(const RingElement& num,
                                              const RingElement& den);

  // Image under the ring homomorphism sending each variable to its binding.
  // Every variable occurring in *this must be bound; negative exponents
  // require the binding to be a unit.
  RingElement substituted(const std::map<std::string, RingElement>& bindings,
                          RingSpecPtr target) const;

  std::string str() const;
  static RingElement parse(RingSpecPtr spec, const std::string& text);

  // Total degree in one variable (max over terms); 0 for zero polynomial.
  int degree_in(int var) const;
  // Minimum exponent of a variable over all terms (0 for zero polynomial).
  int min_exp(int var) const;

 private:
  RingElement(RingSpecPtr spec, TermMap terms)
      : spec_(std::move(spec)), terms_(std::move(terms)) {}
  static void add_term(TermMap& acc, const Exponents& e, const Int& c);
  static TermMap normalize(const RingSpec& spec, TermMap raw, bool reject_negative);

  RingSpecPtr spec_;
  TermMap terms_;
};

}  // namespace skein4
