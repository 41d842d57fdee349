#include "traceform/arith_equivalence.hpp"

namespace traceform {

namespace {

bool divides(const Int& p, const Int& n) { return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0; }

void require_equal_degree(const NumberField& f, const NumberField& l) {
  if (f.degree() != l.degree()) throw Error(ErrorKind::InvalidArgument, "fields of different degree");
}

}  // namespace

SplitSpectrum splitting_spectrum(const NumberField& field, std::uint32_t bound) {
  SplitSpectrum s;
  s.field_label = field.label();
  s.degree = field.degree();
  s.bound = bound;
  for (std::uint32_t q : primes_up_to(bound)) {
    Int p(q);
    if (divides(p, field.index())) {
      s.excluded.emplace_back(p, "divides the index of Z[x]/(f)");
      continue;
    }
    s.entries.emplace(p, splitting_type(field, p));
  }
  return s;
}

SpectrumComparison compare_spectra(const SplitSpectrum& a, const SplitSpectrum& b) {
  if (a.degree != b.degree) throw Error(ErrorKind::InvalidArgument, "fields of different degree");
  SpectrumComparison c;
  for (const auto& [p, sa] : a.entries) {
    auto it = b.entries.find(p);
    if (it == b.entries.end()) continue;
    ++c.compared;
    if (sa.pairs != it->second.pairs) {
      c.consistent = false;
      c.first = sa;
      c.second = it->second;
      break;
    }
  }
  return c;
}

SpectrumComparison compare_spectra(const NumberField& f, const NumberField& l, std::uint32_t bound) {
  require_equal_degree(f, l);
  SpectrumComparison c;
  for (std::uint32_t q : primes_up_to(bound)) {
    Int p(q);
    if (divides(p, f.index()) || divides(p, l.index())) continue;
    PrimeSplit a = splitting_type(f, p), b = splitting_type(l, p);
    ++c.compared;
    if (a.pairs != b.pairs) {
      c.consistent = false;
      c.first = std::move(a);
      c.second = std::move(b);
      break;
    }
  }
  return c;
}

std::optional<NonConjugacyCertificate> non_conjugacy_certificate(const NumberField& f, const NumberField& l,
                                                                 std::uint32_t bound) {
  SpectrumComparison c = compare_spectra(f, l, bound);
  if (c.consistent) return std::nullopt;
  return NonConjugacyCertificate{*c.first, *c.second};
}

}  // namespace traceform
