#include "affsemi/io.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "affsemi/error.hpp"
#include "json.hpp"

namespace affsemi {

namespace {

using nlohmann::json;

Int parse_int(const std::string& token) {
  Int x;
  if (token.empty() || x.set_str(token, 10) != 0) throw ParseError("not an integer: '" + token + "'");
  return x;
}

Int json_int(const json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(std::to_string(j.get<std::uint64_t>()))
                                                           : Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

VectorFile parse_structured(const std::string& text, const std::string& key) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
  if (!doc.contains(key) || !doc[key].is_array()) throw ParseError("missing array \"" + key + "\"");

  VectorFile out;
  const json& rows = doc[key];
  if (doc.contains("ambient_dim")) {
    Int n = json_int(doc["ambient_dim"]);
    if (n < 1 || !n.fits_ulong_p()) throw ParseError("ambient_dim must be a positive integer");
    out.ambient_dim = n.get_ui();
  } else if (!rows.empty() && rows.front().is_array()) {
    out.ambient_dim = rows.front().size();
  } else {
    throw ParseError("cannot determine ambient_dim");
  }
  for (const json& row : rows) {
    if (!row.is_array()) throw ParseError("each entry of \"" + key + "\" must be an array");
    if (row.size() != out.ambient_dim)
      throw ParseError("row " + row.dump() + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(out.ambient_dim));
    IntVec v;
    for (const json& x : row) v.push_back(json_int(x));
    out.rows.push_back(std::move(v));
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ls(line);
  return {std::istream_iterator<std::string>(ls), std::istream_iterator<std::string>()};
}

VectorFile parse_plain(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(in, line);) {
    auto toks = tokens_of(line);
    if (toks.empty() || toks.front().starts_with('#')) continue;
    lines.push_back(std::move(toks));
  }
  if (lines.empty()) throw ParseError("empty input");
  if (lines.front().size() != 2) throw ParseError("header must be \"<ambient_dim> <count>\"");
  Int n = parse_int(lines.front()[0]);
  Int s = parse_int(lines.front()[1]);
  if (n < 1 || !n.fits_ulong_p()) throw ParseError("ambient dimension must be positive");
  if (s < 0 || !s.fits_ulong_p()) throw ParseError("row count must be non-negative");
  VectorFile out;
  out.ambient_dim = n.get_ui();
  if (lines.size() - 1 != s.get_ui())
    throw ParseError("header announces " + s.get_str() + " rows, found " +
                     std::to_string(lines.size() - 1));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != out.ambient_dim)
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(lines[i].size()) +
                       " entries, expected " + std::to_string(out.ambient_dim));
    IntVec v;
    for (const std::string& t : lines[i]) v.push_back(parse_int(t));
    out.rows.push_back(std::move(v));
  }
  return out;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

VectorFile parse_vector_file(std::istream& in, const std::string& key) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input");
  return text[first] == '{' ? parse_structured(text, key) : parse_plain(text);
}

AffineSemigroup parse_semigroup(std::istream& in, std::ostream& warnings) {
  VectorFile file = parse_vector_file(in, "generators");
  std::vector<IntVec> gens;
  for (IntVec& v : file.rows) {
    if (!is_nonneg(v)) throw ParseError("generator " + to_string(v) + " has a negative entry");
    if (is_zero(v)) {
      warnings << "warning: dropping zero generator\n";
      continue;
    }
    gens.push_back(std::move(v));
  }
  const std::size_t given = gens.size();
  AffineSemigroup A = minimalize(file.ambient_dim, std::move(gens));
  if (A.size() < given)
    warnings << "warning: " << given - A.size() << " redundant generator(s) removed\n";
  return A;
}

AffineSemigroup load_semigroup(const std::filesystem::path& path, std::ostream& warnings) {
  auto in = open_or_throw(path);
  return parse_semigroup(in, warnings);
}

MonomialIdeal parse_ideal(std::istream& in, const AffineSemigroup& A) {
  VectorFile file = parse_vector_file(in, "exponents");
  if (file.ambient_dim != A.ambient_dim())
    throw ParseError("ideal exponents have dimension " + std::to_string(file.ambient_dim) +
                     ", semigroup has " + std::to_string(A.ambient_dim()));
  return MonomialIdeal(A, std::move(file.rows));
}

MonomialIdeal load_ideal(const std::filesystem::path& path, const AffineSemigroup& A) {
  auto in = open_or_throw(path);
  return parse_ideal(in, A);
}

std::string semigroup_to_json(const AffineSemigroup& A) {
  json gens = json::array();
  for (const IntVec& g : A.generators()) {
    json row = json::array();
    for (const Int& x : g) row.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
    gens.push_back(std::move(row));
  }
  return json{{"ambient_dim", A.ambient_dim()}, {"generators", std::move(gens)}}.dump();
}

}  // namespace affsemi
