#include "scan.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "traceform/arith_equivalence.hpp"
#include "traceform/trace_forms.hpp"

namespace traceform::cli {

using ojson = nlohmann::ordered_json;

IsometryOptions Effort::isometry() const {
  IsometryOptions o;
  o.max_nodes *= static_cast<std::uint64_t>(level);
  return o;
}

ConjugacyOptions Effort::conjugacy(std::uint64_t seed) const {
  ConjugacyOptions o;
  o.seed = seed;
  o.spectrum_bound *= static_cast<std::uint32_t>(level);
  o.max_precision_bits *= static_cast<std::size_t>(level);
  return o;
}

std::optional<Int> default_max_disc(int degree) {
  switch (degree) {
    case 4:
    case 5:
    case 6: return Int("1000000000");
    case 7: return Int("89000000000");
    case 8: return Int("2500000000");
    case 9: return Int("28000000000");
    case 10: return Int("280000000000");
    default: return std::nullopt;
  }
}

const char* to_string(PairOutcome o) noexcept {
  switch (o) {
    case PairOutcome::Conjugate: return "conjugate";
    case PairOutcome::EquivalentFormsNonconjugate: return "equivalent-forms-nonconjugate";
    case PairOutcome::DistinctForms: return "distinct-forms";
    case PairOutcome::Undetermined: return "undetermined";
  }
  return "?";
}

std::size_t ScanReport::count(PairOutcome o) const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [o](const PairResult& r) { return r.outcome == o; }));
}

PairResult classify_pair(const NumberField& a, const NumberField& b, const Effort& effort, std::uint64_t seed) {
  PairResult r;
  r.disc = a.disc();
  r.first = a.label();
  r.second = b.label();
  ConjugacyResult conj = are_conjugate(a, b, effort.conjugacy(seed));
  r.conjugacy = to_string(conj.outcome);
  if (conj.outcome == ConjugacyResult::Outcome::Yes) {
    r.outcome = PairOutcome::Conjugate;
    r.detail = "isomorphism verified";
    return r;
  }
  std::string conj_note = conj.outcome == ConjugacyResult::Outcome::No ? "non-conjugate: " + conj.reason
                                                                        : "conjugacy undetermined: " + conj.reason;
  if (!a.totally_real() || !b.totally_real() || a.degree() < 2) {
    r.outcome = PairOutcome::Undetermined;
    r.detail = conj_note + "; trace-zero forms are not definite";
    return r;
  }
  try {
    IsometryResult iso = is_isometric(trace_zero_gram(a), trace_zero_gram(b), effort.isometry());
    if (!iso.isometric) {
      r.outcome = PairOutcome::DistinctForms;
      r.detail = "trace-zero forms differ: " + iso.separating_invariant;
      return r;
    }
    r.witness = iso.witness;
    if (conj.outcome == ConjugacyResult::Outcome::No) {
      r.outcome = PairOutcome::EquivalentFormsNonconjugate;
      r.detail = conj_note + "; trace-zero forms isometric";
    } else {
      r.outcome = PairOutcome::Undetermined;
      r.detail = conj_note + "; trace-zero forms isometric";
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SearchExhausted) throw;
    r.outcome = PairOutcome::Undetermined;
    r.detail = conj_note + "; " + e.what();
  }
  return r;
}

namespace {

std::string coeff_key(const IntVector& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
  return s;
}

// Maximal-order data keyed by (coefficients, toolkit version).
class FieldCache {
 public:
  explicit FieldCache(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = ojson::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("key")) continue;
      entries_[j["key"].get<std::string>()] = j;
    }
  }

  static std::string key(const IntVector& coeffs) { return coeff_key(coeffs) + "|" + TRACEFORM_VERSION; }

  std::optional<NumberField> get(const IntVector& coeffs, const std::string& label) const {
    auto it = entries_.find(key(coeffs));
    if (it == entries_.end()) return std::nullopt;
    const ojson& j = it->second;
    try {
      std::size_t n = j["basis"].size();
      RatMatrix basis(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          basis(r, c) = Rat(j["basis"][r][c].get<std::string>());
          basis(r, c).canonicalize();
        }
      return NumberField::from_parts(Poly::from_ints(coeffs), basis, Int(j["disc"].get<std::string>()), label);
    } catch (const std::exception&) {
      return std::nullopt;  // stale or corrupt entry: recompute
    }
  }

  void put(const IntVector& coeffs, const NumberField& k) {
    ojson j;
    j["key"] = key(coeffs);
    j["disc"] = k.disc().get_str();
    ojson rows = ojson::array();
    const RatMatrix& b = k.integral_basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      ojson row = ojson::array();
      for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(b(r, c).get_str());
      rows.push_back(row);
    }
    j["basis"] = rows;
    entries_[j["key"].get<std::string>()] = j;
    dirty_ = true;
  }

  void save() const {
    if (path_.empty() || !dirty_) return;
    std::ofstream out(path_);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write cache " + path_);
    for (const auto& [k, j] : entries_) out << j.dump() << "\n";
  }

 private:
  std::string path_;
  std::map<std::string, ojson> entries_;
  bool dirty_ = false;
};

template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

const char* mode_name(FundamentalMode m) {
  return m == FundamentalMode::QuadraticStyle ? "quadratic-style" : "strict-squarefree";
}

}  // namespace

ScanReport run_scan(const FieldTable& table, const ScanOptions& options) {
  ScanReport report;
  report.options = options;
  report.version = TRACEFORM_VERSION;
  report.timestamp = utc_now();
  report.malformed = table.malformed;

  const std::size_t n = table.records.size();
  FieldCache cache(options.cache_path);
  std::vector<std::optional<NumberField>> fields(n);
  std::vector<std::string> failure(n);
  std::vector<char> from_cache(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& rec = table.records[i];
    if ((fields[i] = cache.get(rec.coeffs, rec.label))) from_cache[i] = 1;
  }
  NumberFieldOptions nf;
  nf.seed = options.seed;
  parallel_for(n, options.jobs, [&](std::size_t i) {
    if (fields[i]) return;
    const auto& rec = table.records[i];
    try {
      fields[i] = NumberField::from_poly(rec.coeffs, nf, rec.label);
    } catch (const Error& e) {
      failure[i] = std::string(to_string(e.kind())) + ": " + e.what();
    }
  });

  std::map<Int, std::vector<std::size_t>> by_disc;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& rec = table.records[i];
    if (!fields[i]) {
      report.excluded.emplace_back(rec.label, failure[i]);
      continue;
    }
    const NumberField& k = *fields[i];
    if (from_cache[i]) {
      ++report.cache_hits;
    } else {
      cache.put(rec.coeffs, k);
    }
    if (rec.expected_disc && *rec.expected_disc != k.disc())
      report.flagged.emplace_back(rec.label, "expected disc " + rec.expected_disc->get_str() + ", computed " +
                                                 k.disc().get_str());
    if (options.filter) {
      std::optional<Int> bound = options.max_disc ? options.max_disc : default_max_disc(k.degree());
      if (bound && Int(abs(k.disc())) > *bound) {
        report.excluded.emplace_back(rec.label, "|disc| " + Int(abs(k.disc())).get_str() + " above " + bound->get_str());
        continue;
      }
      if (!is_fundamental_disc(k.disc(), options.fundamental)) {
        report.excluded.emplace_back(rec.label, "disc " + k.disc().get_str() + " not fundamental (" +
                                                    mode_name(options.fundamental) + ")");
        continue;
      }
      if (options.require_tame && tameness(k) == Tameness::Wild) {
        report.excluded.emplace_back(rec.label, "wildly ramified");
        continue;
      }
    }
    ++report.fields;
    by_disc[k.disc()].push_back(i);
  }
  cache.save();

  struct Job {
    std::size_t a, b;
  };
  std::vector<Job> jobs;
  for (auto& [d, idx] : by_disc) {
    if (idx.size() < 2) {
      ++report.singletons;
      continue;
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      return table.records[x].label < table.records[y].label;
    });
    auto& labels = report.groups[d];
    for (std::size_t x : idx) labels.push_back(table.records[x].label);
    for (std::size_t x = 0; x < idx.size(); ++x)
      for (std::size_t y = x + 1; y < idx.size(); ++y) jobs.push_back({idx[x], idx[y]});
  }
  report.pairs.resize(jobs.size());
  parallel_for(jobs.size(), options.jobs, [&](std::size_t j) {
    const NumberField& a = *fields[jobs[j].a];
    const NumberField& b = *fields[jobs[j].b];
    try {
      report.pairs[j] = classify_pair(a, b, options.effort, options.seed);
    } catch (const Error& e) {
      PairResult r;
      r.disc = a.disc();
      r.first = a.label();
      r.second = b.label();
      r.conjugacy = "undetermined";
      r.detail = std::string(to_string(e.kind())) + ": " + e.what();
      report.pairs[j] = std::move(r);
    }
  });
  return report;
}

namespace {

ojson matrix_json(const IntMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

void write_report(const ScanReport& report, std::ostream& out) {
  const ScanOptions& o = report.options;
  ojson config;
  config["record"] = "config";
  config["version"] = report.version;
  config["timestamp"] = report.timestamp;
  config["table"] = o.table_path;
  config["fundamental"] = mode_name(o.fundamental);
  config["filter"] = o.filter;
  config["require_tame"] = o.require_tame;
  config["max_disc"] = o.max_disc ? o.max_disc->get_str() : "per-degree default";
  config["seed"] = o.seed;
  config["effort"] = o.effort.level;
  config["jobs"] = o.jobs;
  config["cache"] = o.cache_path;
  out << config.dump() << "\n";
  for (const auto& m : report.malformed) {
    ojson j;
    j["record"] = "malformed";
    j["line"] = m.line;
    j["text"] = m.text;
    j["reason"] = m.reason;
    out << j.dump() << "\n";
  }
  for (const auto& [label, why] : report.flagged) {
    ojson j;
    j["record"] = "flagged";
    j["label"] = label;
    j["reason"] = why;
    out << j.dump() << "\n";
  }
  for (const auto& [label, why] : report.excluded) {
    ojson j;
    j["record"] = "excluded";
    j["label"] = label;
    j["reason"] = why;
    out << j.dump() << "\n";
  }
  for (const auto& [d, labels] : report.groups) {
    ojson j;
    j["record"] = "group";
    j["disc"] = d.get_str();
    j["labels"] = labels;
    out << j.dump() << "\n";
  }
  for (const auto& p : report.pairs) {
    ojson j;
    j["record"] = "pair";
    j["disc"] = p.disc.get_str();
    j["first"] = p.first;
    j["second"] = p.second;
    j["outcome"] = to_string(p.outcome);
    j["conjugacy"] = p.conjugacy;
    j["detail"] = p.detail;
    j["candidate"] = p.outcome == PairOutcome::EquivalentFormsNonconjugate;
    if (p.witness) j["witness"] = matrix_json(*p.witness);
    out << j.dump() << "\n";
  }
  ojson s;
  s["record"] = "summary";
  s["records"] = report.fields + report.excluded.size();
  s["malformed"] = report.malformed.size();
  s["flagged"] = report.flagged.size();
  s["excluded"] = report.excluded.size();
  s["fields"] = report.fields;
  s["groups"] = report.groups.size();
  s["singletons"] = report.singletons;
  s["pairs"] = report.pairs.size();
  s["conjugate"] = report.count(PairOutcome::Conjugate);
  s["distinct_forms"] = report.count(PairOutcome::DistinctForms);
  s["equivalent_forms_nonconjugate"] = report.count(PairOutcome::EquivalentFormsNonconjugate);
  s["undetermined"] = report.count(PairOutcome::Undetermined);
  out << s.dump() << "\n";
}

void write_summary(const ScanReport& report, std::ostream& out) {
  out << "fields           " << report.fields << " (" << report.excluded.size() << " excluded, "
      << report.malformed.size() << " malformed, " << report.flagged.size() << " flagged, " << report.cache_hits
      << " from cache)\n"
      << "groups           " << report.groups.size() << " (" << report.singletons << " singleton discriminants)\n"
      << "pairs            " << report.pairs.size() << "\n"
      << "  conjugate      " << report.count(PairOutcome::Conjugate) << "\n"
      << "  distinct-forms " << report.count(PairOutcome::DistinctForms) << "\n"
      << "  equivalent-forms-nonconjugate " << report.count(PairOutcome::EquivalentFormsNonconjugate) << "\n"
      << "  undetermined   " << report.count(PairOutcome::Undetermined) << "\n";
  for (const auto& p : report.pairs) {
    if (p.outcome == PairOutcome::EquivalentFormsNonconjugate)
      out << "CANDIDATE " << p.first << " / " << p.second << ": " << p.detail << "\n";
    else if (p.outcome == PairOutcome::Undetermined)
      out << "undetermined " << p.first << " / " << p.second << ": " << p.detail << "\n";
  }
}

}  // namespace traceform::cli
