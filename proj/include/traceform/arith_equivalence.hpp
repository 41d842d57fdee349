#pragma once

// Splitting-type spectra: evidence for arithmetic equivalence and
// certificates of non-conjugacy from a prime that splits differently.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "traceform/number_field.hpp"

namespace traceform {

struct SplitSpectrum {
  std::string field_label;
  int degree = 0;
  std::uint32_t bound = 0;
  std::map<Int, PrimeSplit> entries;                    // primes <= bound not dividing the index
  std::vector<std::pair<Int, std::string>> excluded;   // skipped primes with the reason
};

SplitSpectrum splitting_spectrum(const NumberField& field, std::uint32_t bound);

struct SpectrumComparison {
  bool consistent = true;
  std::size_t compared = 0;  // primes included in both spectra
  /// First disagreement, when not consistent.
  std::optional<PrimeSplit> first;
  std::optional<PrimeSplit> second;
};

/// Throws InvalidArgument on a degree mismatch.
SpectrumComparison compare_spectra(const SplitSpectrum& a, const SplitSpectrum& b);
SpectrumComparison compare_spectra(const NumberField& f, const NumberField& l, std::uint32_t bound);

struct NonConjugacyCertificate {
  PrimeSplit first;
  PrimeSplit second;
  const Int& prime() const { return first.p; }
};

/// Smallest prime <= bound where the included splitting types differ.
std::optional<NonConjugacyCertificate> non_conjugacy_certificate(const NumberField& f, const NumberField& l,
                                                                 std::uint32_t bound = 10'000);

}  // namespace traceform
