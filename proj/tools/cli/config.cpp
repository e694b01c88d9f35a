#include "cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cyint/reduction.hpp"

namespace cyint::app {

namespace {

using json = nlohmann::json;

const std::vector<Command> kCommands = {Command::kFrobeniusBasis,     Command::kMirror,   Command::kInstantons,
                                        Command::kCheck,              Command::kHasseWitt, Command::kFrobeniusStructure,
                                        Command::kDerivePf,           Command::kVerify};

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(std::string("cannot open ") + what + " '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points one past the offending character.
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ConfigError(origin + ":" + std::to_string(line_of(text, at)) + ": malformed JSON (" + e.what() + ")");
  }
}

[[noreturn]] void field_error(const std::string& origin, const std::string& field, const std::string& msg) {
  throw ConfigError(origin + ": field '" + field + "': " + msg);
}

std::size_t positive_size(const json& v, const std::string& origin, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 1) field_error(origin, field, "expected an integer >= 1");
  return static_cast<std::size_t>(v.get<long long>());
}

std::string string_field(const json& v, const std::string& origin, const std::string& field) {
  if (!v.is_string()) field_error(origin, field, "expected a string");
  return v.get<std::string>();
}

Rational rational_field(const json& v, const std::string& origin, const std::string& field) {
  try {
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::exception&) {
  }
  field_error(origin, field, "expected an exact rational (integer or \"a/b\" string)");
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (Command c : kCommands) v.emplace_back(to_string(c));
    return v;
  }();
  return names;
}

const char* to_string(Command c) {
  switch (c) {
    case Command::kFrobeniusBasis: return "frobenius-basis";
    case Command::kMirror: return "mirror";
    case Command::kInstantons: return "instantons";
    case Command::kCheck: return "check";
    case Command::kHasseWitt: return "hasse-witt";
    case Command::kFrobeniusStructure: return "frobenius-structure";
    case Command::kDerivePf: return "derive-pf";
    case Command::kVerify: return "verify";
  }
  return "?";
}

Command parse_command(const std::string& name) {
  for (Command c : kCommands)
    if (name == to_string(c)) return c;
  throw ConfigError("unknown command '" + name + "'");
}

Format parse_format(const std::string& text) {
  if (text == "tsv") return Format::kTsv;
  if (text == "json") return Format::kJson;
  throw ConfigError("unknown output format '" + text + "' (expected tsv or json)");
}

std::vector<std::int64_t> parse_prime_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ConfigError("invalid prime '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty prime list");
  return out;
}

void RunConfig::overlay(const RunConfig& o) {
  auto take = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  take(command, o.command);
  take(op, o.op);
  take(family, o.family);
  take(n, o.n);
  take(primes, o.primes);
  take(N, o.N);
  take(M, o.M);
  take(R, o.R);
  take(k, o.k);
  take(s, o.s);
  take(kappa, o.kappa);
  take(suite, o.suite);
  take(format, o.format);
  take(output, o.output);
  take(extended, o.extended);
}

void RunConfig::validate() const {
  if (primes)
    for (std::int64_t p : *primes)
      if (p < 3 || !is_prime(p)) throw ConfigError("primes must be odd primes; got " + std::to_string(p));
  auto at_least_one = [](const std::optional<std::size_t>& v, const char* name) {
    if (v && *v < 1) throw ConfigError(std::string(name) + " must be >= 1");
  };
  at_least_one(N, "N");
  at_least_one(M, "M");
  at_least_one(R, "R");
  at_least_one(k, "k");
  if (s && *s != 2 && *s != 3) throw ConfigError("s must be 2 or 3");
  if (n && *n < 1) throw ConfigError("n must be >= 1");
  if (kappa) {
    try {
      parse_rational(*kappa);
    } catch (const std::exception&) {
      throw ConfigError("kappa must be an exact rational; got '" + *kappa + "'");
    }
  }
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (command) j["command"] = to_string(*command);
  if (op) j["operator"] = *op;
  if (family) j["family"] = *family;
  if (n) j["n"] = *n;
  if (primes) j["primes"] = *primes;
  if (N) j["N"] = *N;
  if (M) j["M"] = *M;
  if (R) j["R"] = *R;
  if (k) j["k"] = *k;
  if (s) j["s"] = *s;
  if (kappa) j["kappa"] = *kappa;
  if (suite) j["suite"] = *suite;
  if (extended) j["extended"] = *extended;
  return j;
}

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
  json j = parse_json(text, origin);
  if (!j.is_object()) throw ConfigError(origin + ":1: config must be a JSON object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "command") {
      c.command = parse_command(string_field(v, origin, key));
    } else if (key == "operator") {
      c.op = string_field(v, origin, key);
    } else if (key == "family") {
      c.family = string_field(v, origin, key);
    } else if (key == "n") {
      c.n = positive_size(v, origin, key);
    } else if (key == "primes") {
      std::vector<std::int64_t> ps;
      if (v.is_string()) {
        ps = parse_prime_list(v.get<std::string>());
      } else if (v.is_array()) {
        for (const auto& x : v) {
          if (!x.is_number_integer()) field_error(origin, key, "expected integers");
          ps.push_back(x.get<std::int64_t>());
        }
      } else {
        field_error(origin, key, "expected an array of primes or a comma-separated string");
      }
      c.primes = ps;
    } else if (key == "N") {
      c.N = positive_size(v, origin, key);
    } else if (key == "M") {
      c.M = positive_size(v, origin, key);
    } else if (key == "R") {
      c.R = positive_size(v, origin, key);
    } else if (key == "k") {
      c.k = positive_size(v, origin, key);
    } else if (key == "s") {
      if (!v.is_number_integer()) field_error(origin, key, "expected 2 or 3");
      c.s = v.get<int>();
    } else if (key == "kappa") {
      c.kappa = to_string(rational_field(v, origin, key));
    } else if (key == "suite") {
      c.suite = string_field(v, origin, key);
    } else if (key == "format") {
      c.format = parse_format(string_field(v, origin, key));
    } else if (key == "output") {
      c.output = string_field(v, origin, key);
    } else if (key == "extended") {
      if (!v.is_boolean()) field_error(origin, key, "expected true or false");
      c.extended = v.get<bool>();
    } else {
      field_error(origin, key, "unknown field");
    }
  }
  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  return c;
}

RunConfig load_config_file(const std::string& path) { return parse_config_text(read_file(path, "config"), path); }

ThetaOperator parse_operator_json(const json& j, const std::string& origin) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw ConfigError(origin + ": operator file needs \"order\" and \"coeffs\"");
  std::size_t order = positive_size(j["order"], origin, "order");
  const json& cs = j["coeffs"];
  if (!cs.is_array() || cs.size() != order + 1)
    field_error(origin, "coeffs", "expected order+1 coefficient lists (a_0 .. a_n)");
  std::vector<RationalPoly> coeffs;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string field = "coeffs[" + std::to_string(i) + "]";
    if (!cs[i].is_array()) field_error(origin, field, "expected a list of t-coefficients");
    RationalPoly a;
    for (const auto& x : cs[i]) a.push_back(rational_field(x, origin, field));
    coeffs.push_back(std::move(a));
  }
  ThetaOperator L(std::move(coeffs));
  if (L.coeff(order, 0) == 0) field_error(origin, "coeffs", "a_n(0) must be nonzero");
  if (!is_mum(L)) field_error(origin, "coeffs", "operator is not of maximal unipotent monodromy type");
  return L;
}

ThetaOperator resolve_operator(const std::string& sel) {
  auto dim_after = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (sel.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = sel.substr(prefix.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit) || rest.size() > 3)
      throw ConfigError("invalid dimension in operator '" + sel + "'");
    return static_cast<std::size_t>(std::stoul(rest));
  };
  if (sel == "quintic") return quintic_operator();
  if (sel == "diagonal4" || sel == "diagonal") return diagonal4_operator();
  if (auto n = dim_after("simplicial:")) {
    if (*n < 1) throw ConfigError("simplicial operator needs n >= 1");
    return simplicial_operator(*n);
  }
  if (auto n = dim_after("hyperoctahedral:")) {
    if (*n < 2 || *n > 6) throw ConfigError("hyperoctahedral operator derivation supports 2 <= n <= 6");
    Family fam = build_family(FamilySpec::hyperoctahedral(*n));
    return fam.dimension() == 4 ? diagonal4_operator() : derive_picard_fuchs(fam, 30);
  }
  return parse_operator_json(parse_json(read_file(sel, "operator file"), sel), sel);
}

FamilySpec parse_family_json(const json& j, const std::string& origin) {
  if (!j.is_object() || !j.contains("g") || !j.contains("facets"))
    throw ConfigError(origin + ": family file needs \"g\" and \"facets\"");
  const json& g = j["g"];
  if (!g.is_array() || g.empty()) field_error(origin, "g", "expected a nonempty list of terms");
  std::optional<std::size_t> n;
  IntLaurent poly;
  bool first = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::string field = "g[" + std::to_string(i) + "]";
    const json& term = g[i];
    if (!term.is_object() || !term.contains("exp") || !term.contains("coeff") || !term["exp"].is_array())
      field_error(origin, field, "expected {\"exp\": [..], \"coeff\": c}");
    Exponent u;
    for (const auto& e : term["exp"]) {
      if (!e.is_number_integer()) field_error(origin, field + ".exp", "expected integers");
      u.push_back(e.get<int>());
    }
    if (n && u.size() != *n) field_error(origin, field + ".exp", "inconsistent dimension");
    n = u.size();
    Rational c = rational_field(term["coeff"], origin, field + ".coeff");
    if (c.get_den() != 1) field_error(origin, field + ".coeff", "coefficients must be integers");
    if (first) {
      poly = IntLaurent(*n);
      first = false;
    }
    poly.add(u, c.get_num());
  }
  const json& fs = j["facets"];
  if (!fs.is_array()) field_error(origin, "facets", "expected a list of integer vectors");
  std::vector<std::vector<int>> facets;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::string field = "facets[" + std::to_string(i) + "]";
    if (!fs[i].is_array() || fs[i].size() != *n) field_error(origin, field, "expected a vector of length n");
    std::vector<int> l;
    for (const auto& e : fs[i]) {
      if (!e.is_number_integer()) field_error(origin, field, "expected integers");
      l.push_back(e.get<int>());
    }
    facets.push_back(std::move(l));
  }
  return FamilySpec::custom(std::move(poly), std::move(facets));
}

FamilySpec resolve_family(const std::string& sel, std::optional<std::size_t> n) {
  std::string name = sel;
  auto colon = sel.find(':');
  if (colon != std::string::npos && (sel.rfind("simplicial:", 0) == 0 || sel.rfind("hyperoctahedral:", 0) == 0)) {
    name = sel.substr(0, colon);
    std::string rest = sel.substr(colon + 1);
    if (rest.empty() || rest.size() > 3 || !std::all_of(rest.begin(), rest.end(), ::isdigit))
      throw ConfigError("invalid dimension in family '" + sel + "'");
    std::size_t d = std::stoul(rest);
    if (n && *n != d) throw ConfigError("family '" + sel + "' conflicts with n = " + std::to_string(*n));
    n = d;
  }
  if (name == "simplicial" || name == "hyperoctahedral") {
    if (!n) throw ConfigError("family '" + name + "' needs a dimension (--dim)");
    if (*n < 2) throw ConfigError("builtin families need n >= 2");
    return name == "simplicial" ? FamilySpec::simplicial(*n) : FamilySpec::hyperoctahedral(*n);
  }
  FamilySpec spec = parse_family_json(parse_json(read_file(sel, "family file"), sel), sel);
  if (n && *n != spec.n) throw ConfigError(sel + ": family dimension differs from n = " + std::to_string(*n));
  return spec;
}

}  // namespace cyint::app
