#include "ospec/json_io.hpp"

#include <stdexcept>

namespace ospec::jsonio {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

json spectrum_to_json(const spectra::Spectrum& s) {
  json mu = json::array();
  for (const Int& m : s.mu()) mu.push_back(int_to_json(m));
  return json{{"mu", mu}};
}

json group_to_json(const catalog::GroupSpec& g) {
  json j{{"family", catalog::family_name(g.family)}};
  switch (g.family) {
    case catalog::Family::L2:
    case catalog::Family::Ree:
      j["q"] = int_to_json(g.q);
      break;
    case catalog::Family::Dihedral:
      j["n"] = g.n;
      break;
    default:
      break;
  }
  return j;
}

catalog::GroupSpec group_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "L2") return catalog::GroupSpec::l2(int_from_json(j.at("q")));
  if (family == "Ree") return catalog::GroupSpec::ree(int_from_json(j.at("q")));
  if (family == "J1") return catalog::GroupSpec::j1();
  if (family == "Alt5") return catalog::GroupSpec::alt5();
  if (family == "Dihedral")
    return catalog::GroupSpec::dihedral(j.at("n").get<unsigned long>());
  throw std::invalid_argument("unknown family: " + family);
}

json graph_to_json(const primegraph::PrimeGraph& g) {
  json vertices = json::array();
  for (const Int& p : g.vertices) vertices.push_back(int_to_json(p));
  json edges = json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (g.adjacent(i, j)) {
        edges.push_back(json::array(
            {int_to_json(g.vertices[i]), int_to_json(g.vertices[j])}));
      }
    }
  }
  return json{{"vertices", vertices}, {"edges", edges}};
}

json coclique_to_json(const primegraph::CocliqueResult& r) {
  json witness = json::array();
  for (const Int& p : r.witness) witness.push_back(int_to_json(p));
  return json{{"t", r.size}, {"witness", witness}};
}

json certificate_to_json(const constructions::SequenceCertificate& c) {
  json terms = json::array();
  for (unsigned long t : c.terms) terms.push_back(t);
  json skipped = json::array();
  for (const auto& e : c.skipped) {
    skipped.push_back(json{{"candidate", e.candidate},
                           {"j", e.witness},
                           {"reason", constructions::to_string(e.reason)}});
  }
  return json{{"terms", terms}, {"skipped", skipped}};
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const Check& c : r.checks) {
    checks.push_back(json{{"name", c.name},
                          {"status", to_string(c.status)},
                          {"detail", c.detail}});
  }
  return checks;
}

json field_to_json(const ffverify::Gf3Field& f) {
  json coeffs = json::array();
  for (std::uint8_t c : f.modulus()) coeffs.push_back(static_cast<unsigned>(c));
  return json{{"characteristic", 3},
              {"degree", f.degree()},
              {"modulus", coeffs},
              {"size", f.size()}};
}

}  // namespace ospec::jsonio
