#include "l1hom/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "l1hom/errors.hpp"

namespace l1hom {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw MalformedInput(msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Rat rat_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a rational string");
  try {
    return rat_parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

std::vector<Vertex> vertex_tuple(const Json& j) {
  if (!j.is_array()) fail("simplex must be an array of vertex ids");
  std::vector<Vertex> vs;
  for (const auto& e : j) {
    if (!e.is_number_integer()) fail("vertex ids must be integers");
    vs.push_back(e.get<int>());
  }
  return vs;
}

Simplex simplex_from(const Json& j) {
  std::vector<Vertex> vs = vertex_tuple(j);
  if (vs.empty()) fail("empty simplex");
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    if (vs[i] >= vs[i + 1]) fail("simplex vertices must be strictly increasing");
  }
  if (vs.front() < 0) fail("negative vertex id");
  return Simplex{std::move(vs)};
}

Json simplex_json(const Simplex& s) {
  Json out = Json::array();
  for (Vertex v : s.vertices) out.push_back(v);
  return out;
}

// Shared shape of chains and measure chains: degree plus a sparse list of
// (simplex, rational) entries under `list_key`/`value_key`.
std::map<Simplex, Rat> sparse_from_json(const Json& j, const char* list_key,
                                        const char* value_key, int degree,
                                        const SimplicialComplex* x) {
  const Json& list = field(j, list_key);
  if (!list.is_array()) fail(std::string("\"") + list_key + "\" must be an array");
  std::map<Simplex, Rat> out;
  for (const auto& entry : list) {
    Simplex s = simplex_from(field(entry, "simplex"));
    if (s.degree() != degree) fail("entry degree does not match the chain degree");
    if (x && !x->contains(s)) {
      fail("simplex " + field(entry, "simplex").dump() +
           " is not part of the complex");
    }
    Rat value = rat_field(entry, value_key);
    if (!out.emplace(std::move(s), std::move(value)).second) {
      fail("duplicate simplex entry");
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

Json sparse_to_json(const std::map<Simplex, Rat>& entries, const char* value_key) {
  Json list = Json::array();
  for (const auto& [s, v] : entries) {
    Json entry;
    entry["simplex"] = simplex_json(s);
    entry[value_key] = rat_str(v);
    list.push_back(std::move(entry));
  }
  return list;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; convert it to line/column.
    size_t line = 1, col = 1;
    size_t stop = e.byte > 0 ? e.byte - 1 : 0;
    for (size_t i = 0; i < stop && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("JSON parse error at line " + std::to_string(line) + ", column " +
         std::to_string(col) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail("cannot write " + path);
  out << j.dump(2) << "\n";
}

Json complex_to_json(const SimplicialComplex& x) {
  Json facets = Json::array();
  for (const auto& s : x.maximal_simplices()) facets.push_back(simplex_json(s));
  Json out;
  out["facets"] = std::move(facets);
  return out;
}

SimplicialComplex complex_from_json(const Json& j) {
  const Json& facets = field(j, "facets");
  if (!facets.is_array() || facets.empty()) fail("\"facets\" must be a nonempty array");
  std::vector<std::vector<Vertex>> list;
  for (const auto& f : facets) list.push_back(vertex_tuple(f));
  return build_complex(list);
}

Json chain_to_json(const Chain& c) {
  Json out;
  out["degree"] = c.degree;
  out["terms"] = sparse_to_json(c.terms, "coeff");
  return out;
}

Chain chain_from_json(const Json& j, const SimplicialComplex* x) {
  Chain c(int_field(j, "degree"));
  if (c.degree < 0) fail("negative degree");
  c.terms = sparse_from_json(j, "terms", "coeff", c.degree, x);
  return c;
}

Json measure_to_json(const MeasureChain& mu) {
  Json out;
  out["degree"] = mu.degree;
  out["masses"] = sparse_to_json(mu.masses, "coeff");
  return out;
}

MeasureChain measure_from_json(const Json& j, const SimplicialComplex* x) {
  MeasureChain mu(int_field(j, "degree"));
  if (mu.degree < 0) fail("negative degree");
  mu.masses = sparse_from_json(j, "masses", "coeff", mu.degree, x);
  return mu;
}

Json certificate_to_json(const SimplicialComplex& x,
                         const DualCertificate& cert) {
  Json values = Json::array();
  const int k = cert.cochain.degree;
  for (int i = 0; i < x.count(k); ++i) {
    Json entry;
    entry["simplex"] = simplex_json(x.simplex(k, i));
    entry["value"] = rat_str(cert.cochain.values[i]);
    values.push_back(std::move(entry));
  }
  Json out;
  out["degree"] = k;
  out["values"] = std::move(values);
  out["pairing"] = rat_str(cert.pairing);
  out["sup_norm"] = rat_str(cert.sup_norm);
  return out;
}

DualCertificate certificate_from_json(const Json& j,
                                      const SimplicialComplex& x) {
  DualCertificate cert;
  const int k = int_field(j, "degree");
  cert.cochain.degree = k;
  cert.cochain.values.assign(x.count(k), Rat(0));

  const Json& values = field(j, "values");
  if (!values.is_array()) fail("\"values\" must be an array");
  std::vector<bool> seen(x.count(k), false);
  for (const auto& entry : values) {
    Simplex s = simplex_from(field(entry, "simplex"));
    int i = s.degree() == k ? x.index_of(s) : -1;
    if (i < 0) fail("certificate names a simplex outside the complex");
    if (seen[i]) fail("duplicate certificate entry");
    seen[i] = true;
    cert.cochain.values[i] = rat_field(entry, "value");
  }
  for (bool b : seen) {
    if (!b) fail("certificate is not total: a simplex value is missing");
  }
  cert.pairing = rat_field(j, "pairing");
  cert.sup_norm = rat_field(j, "sup_norm");
  return cert;
}

Json cover_to_json(const CoveringMap& cover) {
  Json out;
  out["total"] = complex_to_json(cover.total);
  out["base"] = complex_to_json(cover.base);
  Json proj = Json::array();
  for (const auto& [tv, bv] : cover.projection) {
    proj.push_back(Json::array({tv, bv}));
  }
  out["projection"] = std::move(proj);
  return out;
}

CoveringMap cover_from_json(const Json& j) {
  SimplicialComplex total = complex_from_json(field(j, "total"));
  SimplicialComplex base = complex_from_json(field(j, "base"));
  const Json& proj = field(j, "projection");
  if (!proj.is_array()) fail("\"projection\" must be an array of pairs");
  std::map<Vertex, Vertex> projection;
  for (const auto& pair : proj) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      fail("projection entries must be [total_vertex, base_vertex] pairs");
    }
    if (!projection.emplace(pair[0].get<int>(), pair[1].get<int>()).second) {
      fail("duplicate projection entry");
    }
  }
  return validate_cover(std::move(total), std::move(base), std::move(projection));
}

Json section_to_json(const Section& s) {
  Json list = Json::array();
  for (const auto& [base, total] : s.assignment) {
    Json entry;
    entry["base"] = simplex_json(base);
    entry["total"] = simplex_json(total);
    list.push_back(std::move(entry));
  }
  Json out;
  out["assignment"] = std::move(list);
  return out;
}

std::string digest_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace l1hom
