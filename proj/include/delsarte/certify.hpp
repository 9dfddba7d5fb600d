#pragma once

#include <string>
#include <variant>
#include <vector>

#include "delsarte/bernstein.hpp"
#include "delsarte/funspace.hpp"
#include "delsarte/parallel.hpp"
#include "delsarte/rational.hpp"

namespace delsarte {

// A recorded bound proof: f = sum coeff * fn must satisfy f(t) + c <= 0 on
// [-1, cos alpha] and f(1) + c <= 1 for some c > 0; then N <= 1/c points.
struct CertEntry {
  BasisFunction fn;
  Rational coeff;  // >= 0, always a finite decimal
};

struct Certificate {
  int n = 0;
  Rational alpha_deg;
  std::vector<CertEntry> entries;
  long claimed_bound = 0;
};

struct VerifyOptions {
  int max_depth = 40;
  long max_cells = 500000;
  Exec exec = default_exec();
};

struct VerifyValid {
  Integer proved_bound;     // floor(1 / c_star)
  Rational c_star;          // largest certified admissible c
  Rational margin_at_one;   // 1 - (f(1) + c_star), >= 0
  bool claim_established = false;  // proved_bound <= claimed_bound
  std::vector<std::string> guarantees;  // structural cover of condition (i)
};

struct VerifyInvalid {
  std::string reason;
  bool has_witness = false;
  Rational witness_point;
  Rational witness_value;  // exact f at the witness, > 0
};

struct VerifyReport {
  std::variant<VerifyValid, VerifyInvalid> status;
  bool valid() const { return std::holds_alternative<VerifyValid>(status); }
  const VerifyValid& as_valid() const { return std::get<VerifyValid>(status); }
  const VerifyInvalid& as_invalid() const {
    return std::get<VerifyInvalid>(status);
  }
};

// Exact verification of the two numerical conditions; condition (i) is
// discharged structurally (Schoenberg for Gegenbauer entries, the extension
// theorems for f_alpha / g_beta / Musin hats) and recorded per entry.
VerifyReport verify(const Certificate& cert, const VerifyOptions& opts = {});

// cos(alpha_deg) at the fixed 40-digit quantization every consumer shares
Rational certificate_cos_alpha(const Certificate& cert);

// exact f(t)
Rational certificate_value_at(const Certificate& cert, const Rational& t);

// The piecewise-polynomial majorant of f on [-1, z_cap] handed to the
// subdivision engine: exact on polynomial regions, >= f on the slim cells
// that bracket irrational breakpoints, min-of-two branches under Musin hats.
std::vector<SupPiece> certificate_pieces(const std::vector<CertEntry>& entries,
                                         const Rational& z_cap);

// JSON certificate files, coefficients as decimal strings
std::string serialize(const Certificate& cert);
Certificate parse_certificate(const std::string& text);  // throws std::runtime_error

// the appendix tables plus the dimension-10 theorem function
const std::vector<Certificate>& builtin_certificates();

}  // namespace delsarte
