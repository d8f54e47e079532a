#include "pblab/spec_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "pblab/poly_io.hpp"

namespace pblab {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void line_fail(int line, const std::string& what) {
  fail(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& v, int line) {
  try {
    size_t used = 0;
    int out = std::stoi(v, &used);
    if (used != v.size()) line_fail(line, "trailing characters in integer '" + v + "'");
    return out;
  } catch (const std::exception&) {
    line_fail(line, "expected an integer, got '" + v + "'");
  }
}

}  // namespace

SpecFile parse_spec_text(const std::string& text) {
  std::map<std::string, std::pair<std::string, int>> raw;  // key -> (value, line)
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    size_t eq = body.find('=');
    if (eq == std::string::npos) line_fail(lineno, "expected 'key = value'");
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (key.empty()) line_fail(lineno, "empty key");
    if (value.empty()) line_fail(lineno, "empty value for '" + key + "'");
    if (raw.count(key)) line_fail(lineno, "duplicate key '" + key + "'");
    raw[key] = {value, lineno};
  }

  auto take_int = [&](const std::string& key) {
    auto it = raw.find(key);
    if (it == raw.end()) fail(errc::parse_error, "missing required key '" + key + "'");
    auto [value, at] = it->second;
    raw.erase(it);
    return parse_int(value, at);
  };

  int n = take_int("n");
  int d = take_int("d");
  int N = take_int("N");
  int t = take_int("t");
  require(n >= 1 && n <= 9, errc::invalid_parameters, "n must be 1..9");
  require(d >= 2, errc::invalid_parameters, "d must be >= 2");

  auto take_poly = [&](const std::string& key, int at) {
    try {
      return parse_poly(raw.at(key).first, n);
    } catch (const error& e) {
      line_fail(at, std::string("in '") + key + "': " + e.what());
    }
  };

  auto h_it = raw.find("h");
  if (h_it == raw.end()) fail(errc::parse_error, "missing required key 'h'");
  Poly h_poly = take_poly("h", h_it->second.second);
  raw.erase("h");

  int s = d - 1;
  std::vector<Poly> f_components(static_cast<size_t>(s), Poly(n));
  std::vector<Poly> lower_g;
  std::map<int, Rational> a;

  for (auto it = raw.begin(); it != raw.end();) {
    const auto& key = it->first;
    auto [value, at] = it->second;
    if (key.size() >= 2 && (key[0] == 'F' || key[0] == 'G' || key[0] == 'a') &&
        key.find_first_not_of("0123456789", 1) == std::string::npos) {
      int idx = parse_int(key.substr(1), at);
      if (key[0] == 'F') {
        if (idx < 1 || idx > s) line_fail(at, "component F" + std::to_string(idx) + " outside F1..F" + std::to_string(s));
        f_components[static_cast<size_t>(idx - 1)] = take_poly(key, at);
      } else if (key[0] == 'G') {
        if (idx < 1 || idx >= N) line_fail(at, "lower component G" + std::to_string(idx) + " outside G1..G" + std::to_string(N - 1));
        if (static_cast<int>(lower_g.size()) < idx) lower_g.resize(static_cast<size_t>(idx), Poly(n));
        lower_g[static_cast<size_t>(idx - 1)] = take_poly(key, at);
      } else {
        auto r = Rational::parse(value);
        if (!r) line_fail(at, "expected a rational 'p' or 'p/q' for " + key);
        a[idx] = *r;
      }
      it = raw.erase(it);
    } else {
      line_fail(at, "unknown key '" + key + "'");
    }
  }

  HomogeneousPoly h(h_poly);
  return SpecFile{FamilySpec(n, d, N, t, std::move(h), std::move(f_components), std::move(a)),
                  std::move(lower_g)};
}

SpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::parse_error, "cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

}  // namespace pblab
