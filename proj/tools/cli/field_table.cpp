#include "field_table.hpp"

#include <fstream>
#include <istream>
#include <set>

namespace traceform::cli {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(strip(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

bool parse_int(const std::string& s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  out = Int(s[0] == '+' ? s.substr(1) : s);
  return true;
}

}  // namespace

FieldTable parse_field_table(std::istream& in) {
  FieldTable table;
  std::set<std::string> labels;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    std::string text = strip(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    auto bad = [&](std::string why) { table.malformed.push_back({line, strip(raw), std::move(why)}); };
    auto fields = split(text, '|');
    if (fields.size() < 2 || fields.size() > 3) {
      bad("expected 2 or 3 '|'-separated fields");
      continue;
    }
    FieldTableRecord r;
    r.line = line;
    r.label = fields[0];
    if (r.label.empty()) {
      bad("empty label");
      continue;
    }
    if (!labels.insert(r.label).second) {
      bad("duplicate label " + r.label);
      continue;
    }
    bool ok = true;
    for (const auto& c : split(fields[1], ',')) {
      Int v;
      if (!parse_int(c, v)) {
        ok = false;
        break;
      }
      r.coeffs.push_back(v);
    }
    while (ok && !r.coeffs.empty() && r.coeffs.back() == 0) r.coeffs.pop_back();
    if (!ok || r.coeffs.size() < 2) {
      bad(ok ? "degree must be at least 1" : "coefficients must be integers");
      continue;
    }
    if (fields.size() == 3 && !fields[2].empty()) {
      Int d;
      if (!parse_int(fields[2], d)) {
        bad("expected discriminant must be an integer");
        continue;
      }
      r.expected_disc = d;
    }
    table.records.push_back(std::move(r));
  }
  return table;
}

FieldTable read_field_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open table " + path);
  return parse_field_table(in);
}

std::string format_record(const FieldTableRecord& r) {
  std::string out = r.label + " | ";
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) out += (i ? "," : "") + r.coeffs[i].get_str();
  if (r.expected_disc) out += " | " + r.expected_disc->get_str();
  return out;
}

}  // namespace traceform::cli
