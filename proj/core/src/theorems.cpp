#include "sixpoint/theorems.hpp"

#include <string>

#include "sixpoint/error.hpp"

namespace sixpoint {

std::string_view key(SixRatioId id) {
  switch (id) {
    case SixRatioId::a_plus: return "a+";
    case SixRatioId::a_minus: return "a-";
    case SixRatioId::b_plus: return "b+";
    case SixRatioId::b_minus: return "b-";
    case SixRatioId::c_plus: return "c+";
    case SixRatioId::c_minus: return "c-";
  }
  return "?";
}

SixRatioId six_ratio_id(std::string_view k) {
  for (SixRatioId id : kSixRatioIds) {
    if (key(id) == k) return id;
  }
  throw Error(Errc::usage, "unknown ratio key '" + std::string(k) + "'");
}

const ProjRatio& get(const SixRatios& r, SixRatioId id) {
  switch (id) {
    case SixRatioId::a_plus: return r.a_plus;
    case SixRatioId::a_minus: return r.a_minus;
    case SixRatioId::b_plus: return r.b_plus;
    case SixRatioId::b_minus: return r.b_minus;
    case SixRatioId::c_plus: return r.c_plus;
    case SixRatioId::c_minus: return r.c_minus;
  }
  return r.a_plus;
}

ProjRatio& get(SixRatios& r, SixRatioId id) {
  return const_cast<ProjRatio&>(get(static_cast<const SixRatios&>(r), id));
}

int infinite_count(const CevianRatios& r) {
  return int(r.d.is_infinite()) + int(r.e.is_infinite()) + int(r.f.is_infinite());
}

int infinite_count(const SixRatios& r) {
  int n = 0;
  for (SixRatioId id : kSixRatioIds) n += int(get(r, id).is_infinite());
  return n;
}

Integer ceva_form(const CevianRatios& r) {
  return r.d.p() * r.e.p() * r.f.p() - r.d.q() * r.e.q() * r.f.q();
}

Integer menelaus_form(const CevianRatios& r) {
  return r.d.p() * r.e.p() * r.f.p() + r.d.q() * r.e.q() * r.f.q();
}

namespace {

// The five monomials shared by both six-point equations, each multiplied by
// the q-components of the ratios it does not contain.
struct SixTerms {
  Integer plus_triple;   // a+ b+ c+
  Integer minus_triple;  // a- b- c-
  Integer pairs;         // a+a- + b+b- + c+c-
  Integer one;           // 1
};

SixTerms six_terms(const SixRatios& r) {
  const Integer &pap = r.a_plus.p(), &qap = r.a_plus.q();
  const Integer &pam = r.a_minus.p(), &qam = r.a_minus.q();
  const Integer &pbp = r.b_plus.p(), &qbp = r.b_plus.q();
  const Integer &pbm = r.b_minus.p(), &qbm = r.b_minus.q();
  const Integer &pcp = r.c_plus.p(), &qcp = r.c_plus.q();
  const Integer &pcm = r.c_minus.p(), &qcm = r.c_minus.q();

  Integer qa = qap * qam, qb = qbp * qbm, qc = qcp * qcm;
  SixTerms t;
  t.plus_triple = pap * pbp * pcp * qam * qbm * qcm;
  t.minus_triple = pam * pbm * pcm * qap * qbp * qcp;
  t.pairs = pap * pam * qb * qc + pbp * pbm * qa * qc + pcp * pcm * qa * qb;
  t.one = qa * qb * qc;
  return t;
}

}  // namespace

Integer concurrence_form(const SixRatios& r) {
  SixTerms t = six_terms(r);
  return t.plus_triple + t.minus_triple + t.pairs - t.one;
}

Integer collinearity_form(const SixRatios& r) {
  SixTerms t = six_terms(r);
  return t.plus_triple + t.minus_triple - t.pairs + t.one;
}

bool ceva_holds(const CevianRatios& r) { return sgn(ceva_form(r)) == 0; }
bool menelaus_holds(const CevianRatios& r) { return sgn(menelaus_form(r)) == 0; }
bool sixpoint_concurrence_holds(const SixRatios& r) { return sgn(concurrence_form(r)) == 0; }
bool sixpoint_collinearity_holds(const SixRatios& r) { return sgn(collinearity_form(r)) == 0; }

SixRatios classical_embedding(const CevianRatios& r) {
  return SixRatios{r.d, ProjRatio(0), r.e, ProjRatio(0), r.f, ProjRatio(0)};
}

SolveResult solve_sixth_ratio(const PartialSixRatios& five, SolveMode mode) {
  std::optional<SixRatioId> missing;
  int missing_count = 0;
  SixRatios r;
  for (SixRatioId id : kSixRatioIds) {
    const auto& slot = five[static_cast<std::size_t>(id)];
    if (!slot) {
      missing = id;
      ++missing_count;
      continue;
    }
    if (slot->is_infinite()) {
      throw Error(Errc::usage, "given ratio " + std::string(key(id)) + " must be finite");
    }
    get(r, id) = *slot;
  }
  if (missing_count != 1) {
    throw Error(Errc::usage, "exactly one ratio must be left unspecified, got " +
                                 std::to_string(missing_count));
  }

  // The cleared form is homogeneous linear in the missing (p : q), so
  // F(p, q) = alpha * p + beta * q and the two coefficients are its values
  // at (1 : 0) and (0 : 1).
  auto form = [mode](const SixRatios& s) {
    return mode == SolveMode::concurrence ? concurrence_form(s) : collinearity_form(s);
  };
  get(r, *missing) = ProjRatio::infinity();
  Integer alpha = form(r);
  get(r, *missing) = ProjRatio(0);
  Integer beta = form(r);

  if (sgn(alpha) == 0) {
    return SolveResult{sgn(beta) == 0 ? SolveResult::Kind::any : SolveResult::Kind::none,
                       std::nullopt};
  }
  return SolveResult{SolveResult::Kind::unique, ProjRatio::from_fraction(-beta, alpha)};
}

}  // namespace sixpoint
