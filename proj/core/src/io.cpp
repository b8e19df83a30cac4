#include "kronkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kronkit/error.hpp"

namespace kronkit::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) throw Error(Errc::ParseError, std::string("missing field '") + name + "'");
  return obj.at(name);
}

Integer integer_of(const json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(v.get<unsigned long>()) : Integer(v.get<long>());
  }
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw Error(Errc::ParseError, "expected an integer, got " + v.dump());
}

int small_int(const json& v) {
  const Integer x = integer_of(v);
  if (!x.fits_sint_p()) throw Error(Errc::ParseError, "integer out of range: " + x.get_str());
  return static_cast<int>(x.get_si());
}

Rational rational_of(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(integer_of(v));
  throw Error(Errc::ParseError, "expected a rational string, got " + v.dump());
}

// Small integers stay JSON numbers; anything outside int64 becomes a string.
json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

std::vector<int> int_list(const json& v) {
  if (!v.is_array()) throw Error(Errc::ParseError, "expected an array, got " + v.dump());
  std::vector<int> out;
  for (const auto& x : v) out.push_back(small_int(x));
  return out;
}

HyperplaneCandidate hyperplane_of(const json& obj) {
  const json& h = field(obj, "H");
  if (!h.is_array() || h.size() != 3) throw Error(Errc::ParseError, "\"H\" must hold three integer arrays");
  HyperplaneCandidate hz;
  for (std::size_t x = 0; x < 3; ++x) {
    if (!h[x].is_array()) throw Error(Errc::ParseError, "\"H\" components must be arrays");
    for (const auto& v : h[x]) hz.H[x].push_back(integer_of(v));
  }
  hz.z = integer_of(field(obj, "z"));
  return hz;
}

json hyperplane_json(const HyperplaneCandidate& hz) {
  json h = json::array();
  for (const auto& comp : hz.H) {
    json c = json::array();
    for (const auto& v : comp) c.push_back(integer_json(v));
    h.push_back(std::move(c));
  }
  return json{{"H", std::move(h)}, {"z", integer_json(hz.z)}};
}

json point_json(const std::vector<Integer>& p) {
  json out = json::array();
  for (const auto& v : p) out.push_back(integer_json(v));
  return out;
}

std::vector<Integer> point_of(const json& v) {
  if (!v.is_array()) throw Error(Errc::ParseError, "\"p\" must be an array");
  std::vector<Integer> p;
  for (const auto& x : v) p.push_back(integer_of(x));
  return p;
}

}  // namespace

KronInstance parse_instance(std::string_view text) {
  const json j = parse_json(text);
  auto diagram = [&](const char* name) {
    const auto rows = int_list(field(j, name));
    return parse_young(std::span<const int>(rows));
  };
  const YoungDiagram a = diagram("lambda_A");
  const YoungDiagram b = diagram("lambda_B");
  const YoungDiagram c = diagram("lambda_C");
  const int k = j.contains("k") ? small_int(j.at("k")) : a.boxes();
  std::optional<int> m;
  if (j.contains("m") && !j.at("m").is_null()) m = small_int(j.at("m"));
  return make_instance(a, b, c, k, m);
}

std::string to_json(const KronInstance& inst) {
  json j;
  j["lambda_A"] = inst.lambda(Subsystem::A).rows();
  j["lambda_B"] = inst.lambda(Subsystem::B).rows();
  j["lambda_C"] = inst.lambda(Subsystem::C).rows();
  j["k"] = inst.k();
  j["m"] = inst.m();
  return j.dump();
}

RessayreCertificate parse_ressayre(std::string_view text) {
  const json j = parse_json(text);
  RessayreCertificate cert;
  cert.hz = hyperplane_of(j);
  cert.p = point_of(field(j, "p"));
  return cert;
}

std::string to_json(const RessayreCertificate& cert) {
  json j = hyperplane_json(cert.hz);
  j["p"] = point_json(cert.p);
  return j.dump();
}

MembershipCertificate parse_membership(std::string_view text) {
  const json j = parse_json(text);
  const int m = small_int(field(j, "m"));
  if (m < 1 || m > kDefaultMaxRank) throw Error(Errc::ParseError, "certificate rank out of range");
  MembershipCertificate cert(m);
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw Error(Errc::ParseError, "\"entries\" must be an array");
  std::set<std::size_t> seen;
  for (const auto& e : entries) {
    const auto idx = int_list(field(e, "idx"));
    if (idx.size() != 3) throw Error(Errc::ParseError, "\"idx\" must have three entries");
    std::size_t ordinal = 0;
    try {
      ordinal = weight_index(m, idx[0], idx[1], idx[2]);
    } catch (const Error& err) {
      throw Error(Errc::ParseError, err.what());
    }
    if (!seen.insert(ordinal).second) throw Error(Errc::ParseError, "duplicate entry " + field(e, "idx").dump());
    const Rational re = e.contains("re") ? rational_of(e.at("re")) : Rational();
    const Rational im = e.contains("im") ? rational_of(e.at("im")) : Rational();
    cert.set(idx[0], idx[1], idx[2], {re, im});
  }
  return cert;
}

std::string to_json(const MembershipCertificate& cert) {
  json entries = json::array();
  const int m = cert.m();
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) {
      for (int c = 1; c <= m; ++c) {
        const auto& x = cert.at(a, b, c);
        if (x.is_zero()) continue;
        entries.push_back({{"idx", {a, b, c}}, {"re", x.re.str()}, {"im", x.im.str()}});
      }
    }
  }
  return json{{"m", m}, {"entries", std::move(entries)}}.dump();
}

FacetSystem parse_facets(std::string_view text) {
  const json j = parse_json(text);
  FacetSystem fs;
  fs.m = small_int(field(j, "m"));
  for (const auto& e : field(j, "nontrivial")) {
    RessayreElement el;
    el.hz = hyperplane_of(e);
    el.witness_point = point_of(field(e, "p"));
    fs.nontrivial.push_back(std::move(el));
  }
  for (const auto& e : field(j, "chamber")) fs.chamber.push_back(hyperplane_of(e));
  return fs;
}

std::string to_json(const FacetSystem& fs) {
  json nontrivial = json::array();
  for (const auto& e : fs.nontrivial) {
    json item = hyperplane_json(e.hz);
    item["p"] = point_json(e.witness_point);
    nontrivial.push_back(std::move(item));
  }
  json chamber = json::array();
  for (const auto& hz : fs.chamber) chamber.push_back(hyperplane_json(hz));
  return json{{"m", fs.m}, {"nontrivial", std::move(nontrivial)}, {"chamber", std::move(chamber)}}.dump(2);
}

std::string to_csv(const std::vector<SpectrumTriple>& spectra) {
  std::string out;
  char buf[32];
  for (const auto& triple : spectra) {
    bool first = true;
    for (const auto& block : triple) {
      for (double v : block) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        if (!first) out += ',';
        out += buf;
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace kronkit::io
