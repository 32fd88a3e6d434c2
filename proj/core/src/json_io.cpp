#include "borderidx/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace borderidx {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw ParseError("malformed JSON");
  return parsed;
}

std::uint32_t to_exponent(const json& value, const char* what) {
  if (!value.is_number_integer() || value.is_number_float()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  const auto v = value.get<std::int64_t>();
  if (v < 0) throw ParseError(std::string(what) + " must be nonnegative");
  if (v > 0xffffffffll) throw ParseError(std::string(what) + " too large");
  return static_cast<std::uint32_t>(v);
}

ExponentVector to_exponent_vector(const json& value, std::size_t dim,
                                  const char* what) {
  if (!value.is_array() || value.size() != dim) {
    throw ParseError(std::string(what) + " must be an array of " +
                     std::to_string(dim) + " integers");
  }
  std::vector<std::uint32_t> coords;
  coords.reserve(dim);
  for (const auto& entry : value) coords.push_back(to_exponent(entry, what));
  return ExponentVector(std::move(coords));
}

std::vector<ExponentVector> to_vector_list(const json& value, std::size_t dim,
                                           const char* what) {
  if (!value.is_array()) {
    throw ParseError(std::string(what) + " must be an array");
  }
  std::vector<ExponentVector> out;
  out.reserve(value.size());
  for (const auto& entry : value) {
    out.push_back(to_exponent_vector(entry, dim, what));
  }
  return out;
}

void reject_unknown_keys(const json& object,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : object.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return key == k;
        }) == allowed.end()) {
      throw ParseError("unknown key '" + key + "'");
    }
  }
}

}  // namespace

OrderIdeal order_ideal_from_json(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("order ideal must be a JSON object");
  reject_unknown_keys(doc, {"dim", "generators", "elements", "partition"});

  const int forms = doc.contains("generators") + doc.contains("elements") +
                    doc.contains("partition");
  if (forms != 1) {
    throw ParseError(
        "exactly one of 'generators', 'elements', 'partition' is required");
  }

  if (doc.contains("partition")) {
    if (doc.contains("dim") && to_exponent(doc["dim"], "dim") != 2) {
      throw ParseError("'partition' input implies dim 2");
    }
    const auto& parts = doc["partition"];
    if (!parts.is_array() || parts.empty()) {
      throw ParseError("'partition' must be a nonempty array");
    }
    std::vector<std::uint32_t> lambda;
    for (const auto& part : parts) {
      lambda.push_back(to_exponent(part, "partition part"));
    }
    return OrderIdeal::from_partition(lambda);
  }

  if (!doc.contains("dim")) throw ParseError("'dim' is required");
  const std::size_t dim = to_exponent(doc["dim"], "dim");
  if (dim == 0) throw ParseError("'dim' must be positive");

  if (doc.contains("generators")) {
    return OrderIdeal::from_generators(
        dim, to_vector_list(doc["generators"], dim, "generator"));
  }
  return OrderIdeal::validated(
      dim, to_vector_list(doc["elements"], dim, "element"));
}

StanleyDecomposition decomposition_from_json(const std::string& text,
                                             std::size_t expect_dim) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("decomposition must be an object");
  reject_unknown_keys(doc, {"cones"});
  if (!doc.contains("cones") || !doc["cones"].is_array()) {
    throw ParseError("'cones' array is required");
  }
  StanleyDecomposition d;
  d.dim = expect_dim;
  for (const auto& entry : doc["cones"]) {
    if (!entry.is_object()) throw ParseError("cone must be an object");
    reject_unknown_keys(entry, {"anchor", "free"});
    if (!entry.contains("anchor") || !entry.contains("free")) {
      throw ParseError("cone needs 'anchor' and 'free'");
    }
    Cone cone;
    cone.anchor = to_exponent_vector(entry["anchor"], expect_dim, "anchor");
    if (!entry["free"].is_array()) {
      throw ParseError("'free' must be an array of 1-based directions");
    }
    for (const auto& dir : entry["free"]) {
      const std::uint32_t one_based = to_exponent(dir, "free direction");
      if (one_based < 1 || one_based > expect_dim) {
        throw ParseError("free direction out of range");
      }
      cone.free.push_back(one_based - 1);
    }
    std::sort(cone.free.begin(), cone.free.end());
    if (std::adjacent_find(cone.free.begin(), cone.free.end()) !=
        cone.free.end()) {
      throw ParseError("duplicate free direction");
    }
    d.cones.push_back(std::move(cone));
  }
  return d;
}

std::string decomposition_to_json(const StanleyDecomposition& d) {
  ordered_json cones = ordered_json::array();
  for (const auto& cone : d.cones) {
    ordered_json entry;
    entry["anchor"] = cone.anchor.coords();
    auto free = cone.free;
    for (auto& i : free) i += 1;  // 1-based on the wire
    entry["free"] = free;
    cones.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["cones"] = std::move(cones);
  return doc.dump(2) + "\n";
}

std::string gf_to_json(const RationalGF& gf) {
  ordered_json num = ordered_json::array();
  for (const auto& [e, c] : gf.numerator().terms()) {
    ordered_json term = ordered_json::array();
    for (auto coord : e.coords()) term.push_back(coord);
    term.push_back(format_rational(c));
    num.push_back(std::move(term));
  }
  ordered_json doc;
  doc["num"] = std::move(num);
  doc["den"] = gf.denom_exponents().coords();
  return doc.dump(2) + "\n";
}

RationalGF gf_from_json(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("GF must be a JSON object");
  reject_unknown_keys(doc, {"num", "den"});
  if (!doc.contains("num") || !doc.contains("den")) {
    throw ParseError("GF needs 'num' and 'den'");
  }
  if (!doc["den"].is_array()) throw ParseError("'den' must be an array");
  std::vector<std::uint32_t> den;
  for (const auto& e : doc["den"]) {
    den.push_back(to_exponent(e, "denominator exponent"));
  }
  const std::size_t dim = den.size();
  if (!doc["num"].is_array()) throw ParseError("'num' must be an array");
  Polynomial num(dim);
  for (const auto& term : doc["num"]) {
    if (!term.is_array() || term.size() != dim + 1) {
      throw ParseError("numerator term must hold " + std::to_string(dim) +
                       " exponents and a coefficient");
    }
    std::vector<std::uint32_t> coords;
    for (std::size_t i = 0; i < dim; ++i) {
      coords.push_back(to_exponent(term[i], "numerator exponent"));
    }
    if (!term[dim].is_string()) {
      throw ParseError("coefficient must be a string \"p/q\"");
    }
    Rational c;
    try {
      c = parse_rational(term[dim].get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what());
    }
    num.add_term(ExponentVector(std::move(coords)), c);
  }
  return RationalGF(std::move(num), ExponentVector(std::move(den)));
}

std::string index_table_to_json(const IndexTable& table) {
  auto points = box_points(table.bounds());
  std::sort(points.begin(), points.end(), GradedLexLess{});
  ordered_json entries = ordered_json::array();
  for (const auto& p : points) {
    ordered_json entry = ordered_json::array();
    for (auto coord : p.coords()) entry.push_back(coord);
    entry.push_back(table.at(p));
    entries.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["dim"] = table.bounds().dim();
  doc["bounds"] = table.bounds().coords();
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

IndexTable index_table_from_json(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("index table must be an object");
  reject_unknown_keys(doc, {"dim", "bounds", "entries"});
  if (!doc.contains("dim") || !doc.contains("bounds") ||
      !doc.contains("entries")) {
    throw ParseError("index table needs 'dim', 'bounds', 'entries'");
  }
  const std::size_t dim = to_exponent(doc["dim"], "dim");
  const ExponentVector bounds =
      to_exponent_vector(doc["bounds"], dim, "bounds");
  BoxIndexer indexer(bounds);
  std::vector<std::uint64_t> values(indexer.size(), 0);
  if (!doc["entries"].is_array() || doc["entries"].size() != indexer.size()) {
    throw ParseError("index table entry count mismatch");
  }
  for (const auto& entry : doc["entries"]) {
    if (!entry.is_array() || entry.size() != dim + 1) {
      throw ParseError("index entry must hold a point and a value");
    }
    std::vector<std::uint32_t> coords;
    for (std::size_t i = 0; i < dim; ++i) {
      coords.push_back(to_exponent(entry[i], "index entry coordinate"));
    }
    if (!entry[dim].is_number_integer()) {
      throw ParseError("index value must be an integer");
    }
    values[indexer.offset(ExponentVector(std::move(coords)))] =
        entry[dim].get<std::uint64_t>();
  }
  return IndexTable(bounds, std::move(values));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace borderidx
