#include "delsarte/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "delsarte/gegenbauer.hpp"

namespace delsarte {

namespace {

Integer floor_inverse(const Rational& c) {  // floor(1/c) for c > 0
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), c.get_den().get_mpz_t(), c.get_num().get_mpz_t());
  return q;
}

const Rational& rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }

std::vector<Polynomial> entry_alternatives(const CertEntry& e, const Rational& a,
                                           const Rational& b) {
  const Rational& c = e.coeff;
  if (const auto* g = std::get_if<Gegenbauer>(&e.fn))
    return {gegenbauer(g->n, g->k) * c};

  if (const auto* fa = std::get_if<FAlpha>(&e.fn)) {
    const Rational& z = fa->z;
    Rational r = z > 0 ? -sqrt_below(z) : Rational(0);
    Rational s = 1 - z;
    // quadratic branch: exact left of -sqrt(z), and >= 0 = f on the sliver
    // [-sqrt(z), r], so it majorizes f on all of [-1, r]
    if (b <= r) return {Polynomial({z / s, Rational(0), Rational(-1) / s}) * c};
    if (a >= z) return {Polynomial({-z / s, 1 / s}) * c};
    if (a >= r && b <= z) return {Polynomial()};
    throw std::logic_error("f_alpha cell straddles a breakpoint");
  }

  if (const auto* gb = std::get_if<GBeta>(&e.fn)) {
    Rational w = (1 + gb->cos_beta) / 2;  // cos(beta/2)^2
    Rational rlo = -sqrt_above(w);
    // on [rlo, cos_beta] the true value is -1 or 0; majorize by 0
    if (b <= rlo) return {Polynomial::constant(-c)};
    if (a >= gb->cos_beta) return {Polynomial::constant(c)};
    if (a >= rlo && b <= gb->cos_beta) return {Polynomial()};
    throw std::logic_error("g_beta cell straddles a breakpoint");
  }

  const auto& m = std::get<MusinHat>(e.fn);
  Rational half(1, 2);
  if (a >= half) return {Polynomial({Rational(-1), Rational(2)}) * c};
  if (b <= half)
    return {musin_inner(m.dim) * (-c / musin_scale(m.dim)), Polynomial()};
  throw std::logic_error("musin cell straddles the 1/2 breakpoint");
}

}  // namespace

Rational certificate_cos_alpha(const Certificate& cert) {
  return cos_deg_fixed(cert.alpha_deg);
}

Rational certificate_value_at(const Certificate& cert, const Rational& t) {
  Rational v(0);
  for (const auto& e : cert.entries) v += e.coeff * basis_fn_eval_exact(e.fn, t);
  return v;
}

std::vector<SupPiece> certificate_pieces(const std::vector<CertEntry>& entries,
                                         const Rational& z_cap) {
  std::vector<Rational> splits;
  auto add = [&](const Rational& x) {
    if (x > -1 && x < z_cap) splits.push_back(x);
  };
  for (const auto& e : entries) {
    if (const auto* fa = std::get_if<FAlpha>(&e.fn)) {
      add(fa->z > 0 ? -sqrt_below(fa->z) : Rational(0));
      add(fa->z);
    } else if (const auto* gb = std::get_if<GBeta>(&e.fn)) {
      Rational w = (1 + gb->cos_beta) / 2;
      add(-sqrt_above(w));
      add(-sqrt_below(w));
      add(gb->cos_beta);
    } else if (std::get_if<MusinHat>(&e.fn)) {
      add(Rational(1, 2));
    }
  }
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

  std::vector<Rational> bounds;
  bounds.reserve(splits.size() + 2);
  bounds.push_back(Rational(-1));
  for (auto& s : splits) bounds.push_back(s);
  bounds.push_back(z_cap);

  std::vector<SupPiece> out;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    std::vector<Polynomial> branches{Polynomial()};
    for (const auto& e : entries) {
      std::vector<Polynomial> alts = entry_alternatives(e, bounds[i], bounds[i + 1]);
      if (alts.size() == 1) {
        if (!alts[0].is_zero())
          for (auto& br : branches) br += alts[0];
      } else {
        std::vector<Polynomial> next;
        next.reserve(branches.size() * alts.size());
        for (const auto& br : branches)
          for (const auto& alt : alts) next.push_back(br + alt);
        branches = std::move(next);
      }
    }
    out.push_back(SupPiece{Interval(bounds[i], bounds[i + 1]), std::move(branches)});
  }
  return out;
}

VerifyReport verify(const Certificate& cert, const VerifyOptions& opts) {
  auto invalid = [](std::string reason) {
    VerifyReport r;
    r.status = VerifyInvalid{std::move(reason)};
    return r;
  };

  if (cert.n < 2) return invalid("dimension must be at least 2");
  if (cert.alpha_deg <= 0 || cert.alpha_deg > 120)
    return invalid("alpha_deg outside (0, 120]");
  Rational z = certificate_cos_alpha(cert);

  // condition (i): every entry must carry a structural guarantee
  std::vector<std::string> guarantees;
  for (const auto& e : cert.entries) {
    if (e.coeff < 0) return invalid("negative coefficient");
    if (const auto* g = std::get_if<Gegenbauer>(&e.fn)) {
      if (g->n != cert.n || g->k < 0)
        return invalid("Gegenbauer entry outside the certificate dimension");
      guarantees.push_back("G" + std::to_string(g->k) +
                           ": Schoenberg positive semidefiniteness, n=" +
                           std::to_string(cert.n));
    } else if (const auto* fa = std::get_if<FAlpha>(&e.fn)) {
      if (z < 0) return invalid("f_alpha requires alpha <= 90 degrees");
      if (fa->z != z)
        return invalid("f_alpha entry does not match the certificate angle");
      guarantees.push_back("f_alpha: extension theorem, valid in every dimension");
    } else if (const auto* gb = std::get_if<GBeta>(&e.fn)) {
      if (gb->cos_beta <= 0 || gb->cos_beta >= 1)
        return invalid("g_beta requires 0 < cos(beta) < 1");
      guarantees.push_back("g_beta: step-function lemma, valid for every n and alpha");
    } else {
      const auto& m = std::get<MusinHat>(e.fn);
      if ((m.dim != 3 && m.dim != 4) || m.dim != cert.n)
        return invalid("musin hat entry outside dimensions 3/4");
      if (cert.alpha_deg != 60)
        return invalid("musin hat entries require alpha = 60 degrees");
      guarantees.push_back("musin" + std::to_string(m.dim) +
                           ": hat-function lemma, R(" + std::to_string(m.dim) +
                           ", pi/3)");
    }
  }

  Rational f1(0);
  for (const auto& e : cert.entries) f1 += e.coeff;  // every fn is 1 at t=1
  Rational A = 1 - f1;
  if (A <= 0) {
    // witness t = 1: the exact f(1) already rules out every positive c
    VerifyReport r;
    r.status = VerifyInvalid{
        "f(1) >= 1: condition f(1) + c <= 1 admits no positive c", true,
        Rational(1), f1};
    return r;
  }
  if (f1 == 0)
    return invalid("all coefficients are zero: f == 0 admits no positive c");

  SupOptions sopts;
  sopts.max_depth = opts.max_depth;
  sopts.max_cells = opts.max_cells;
  sopts.exec = opts.exec;
  sopts.true_eval = [&cert](const Rational& t) {
    return certificate_value_at(cert, t);
  };
  // Stop as soon as the proved integer bound cannot move any more: the
  // admissible c is pinned to [min(A,-U), min(A,-L)] and both ends yield the
  // same floor(1/c). The relative-width fallback guards the (never observed)
  // case of 1/c sitting exactly on an integer.
  sopts.gap_ok = [&A](const Rational& upper, const Rational& lower) {
    Rational c_lo = rmin(A, -upper);
    if (c_lo <= 0) return false;
    Rational c_hi = rmin(A, -lower);
    if (floor_inverse(c_lo) == floor_inverse(c_hi)) return true;
    return (c_hi - c_lo) * pow10(25) < c_lo;
  };

  SupResult res = certified_sup(certificate_pieces(cert.entries, z), sopts);

  if (res.status == SupResult::Status::PositiveWitness) {
    VerifyReport r;
    r.status = VerifyInvalid{"f takes a positive value on [-1, cos alpha]",
                             true, res.witness_point, res.witness_value};
    return r;
  }
  if (res.status == SupResult::Status::Inconclusive)
    return invalid("certification inconclusive at depth " +
                   std::to_string(res.max_depth_reached));

  Rational c_star = rmin(A, -res.upper);
  if (c_star <= 0)
    return invalid("certified upper bound of f admits no positive c");

  VerifyValid v;
  v.c_star = c_star;
  v.proved_bound = floor_inverse(c_star);
  v.margin_at_one = A - c_star;  // = 1 - (f(1) + c_star)
  v.claim_established = v.proved_bound <= cert.claimed_bound;
  v.guarantees = std::move(guarantees);
  VerifyReport r;
  r.status = std::move(v);
  return r;
}

namespace {

std::string fmt_decimal_or_throw(const Rational& q, const char* what) {
  auto s = format_decimal(q);
  if (!s)
    throw std::invalid_argument(std::string("serialize: ") + what +
                                " is not a finite decimal");
  return *s;
}

}  // namespace

std::string serialize(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["n"] = cert.n;
  j["alpha_deg"] = fmt_decimal_or_throw(cert.alpha_deg, "alpha_deg");
  j["claimed_bound"] = cert.claimed_bound;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : cert.entries) {
    nlohmann::ordered_json je;
    if (const auto* g = std::get_if<Gegenbauer>(&e.fn)) {
      je["fn"] = "gegenbauer";
      je["k"] = g->k;
    } else if (std::get_if<FAlpha>(&e.fn)) {
      je["fn"] = "f_alpha";
    } else if (const auto* gb = std::get_if<GBeta>(&e.fn)) {
      je["fn"] = "g_beta";
      je["cos_beta"] = fmt_decimal_or_throw(gb->cos_beta, "cos_beta");
    } else {
      je["fn"] = "musin" + std::to_string(std::get<MusinHat>(e.fn).dim);
    }
    je["coeff"] = fmt_decimal_or_throw(e.coeff, "coeff");
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
  auto fail = [](const std::string& m) -> Certificate {
    throw std::runtime_error("certificate: " + m);
  };

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("certificate parse: ") + e.what());
  }
  if (!j.is_object()) return fail("top level must be an object");
  if (!j.contains("version") || !j["version"].is_number_integer() ||
      j["version"].get<int>() != 1)
    return fail("unsupported or missing version (expected 1)");
  if (!j.contains("n") || !j["n"].is_number_integer())
    return fail("missing integer field 'n'");
  if (!j.contains("alpha_deg") || !j["alpha_deg"].is_string())
    return fail("'alpha_deg' must be a decimal string");
  if (!j.contains("claimed_bound") || !j["claimed_bound"].is_number_integer())
    return fail("missing integer field 'claimed_bound'");
  if (!j.contains("entries") || !j["entries"].is_array())
    return fail("missing array field 'entries'");

  Certificate cert;
  cert.n = j["n"].get<int>();
  if (cert.n < 2) return fail("'n' must be at least 2");
  auto alpha = parse_decimal(j["alpha_deg"].get<std::string>());
  if (!alpha) return fail("'alpha_deg' is not a plain decimal");
  cert.alpha_deg = *alpha;
  cert.claimed_bound = j["claimed_bound"].get<long>();
  Rational z = cos_deg_fixed(cert.alpha_deg);

  for (const auto& je : j["entries"]) {
    if (!je.is_object()) return fail("entries must be objects");
    if (!je.contains("fn") || !je["fn"].is_string())
      return fail("entry without 'fn' tag");
    if (!je.contains("coeff") || !je["coeff"].is_string())
      return fail("entry 'coeff' must be a decimal string");
    auto coeff = parse_decimal(je["coeff"].get<std::string>());
    if (!coeff) return fail("entry 'coeff' is not a plain decimal");
    if (*coeff < 0) return fail("negative coefficient " + je["coeff"].get<std::string>());

    std::string fn = je["fn"].get<std::string>();
    CertEntry e;
    e.coeff = *coeff;
    if (fn == "gegenbauer") {
      if (!je.contains("k") || !je["k"].is_number_integer())
        return fail("gegenbauer entry requires integer 'k'");
      int k = je["k"].get<int>();
      if (k < 0) return fail("gegenbauer entry with negative degree");
      e.fn = Gegenbauer{cert.n, k};
    } else if (fn == "f_alpha") {
      if (z < 0) return fail("f_alpha entry requires alpha <= 90 degrees");
      e.fn = FAlpha{z};
    } else if (fn == "g_beta") {
      if (!je.contains("cos_beta") || !je["cos_beta"].is_string())
        return fail("g_beta entry requires decimal string 'cos_beta'");
      auto cb = parse_decimal(je["cos_beta"].get<std::string>());
      if (!cb) return fail("'cos_beta' is not a plain decimal");
      if (*cb <= 0 || *cb >= 1) return fail("'cos_beta' must lie in (0, 1)");
      e.fn = GBeta{*cb};
    } else if (fn == "musin3") {
      e.fn = MusinHat{3};
    } else if (fn == "musin4") {
      e.fn = MusinHat{4};
    } else {
      return fail("unknown function tag '" + fn + "'");
    }
    cert.entries.push_back(std::move(e));
  }
  return cert;
}

}  // namespace delsarte
