#pragma once

#include "ospec/catalog.hpp"
#include "ospec/constructions.hpp"
#include "ospec/gf3.hpp"
#include "ospec/prime_graph.hpp"
#include "ospec/report.hpp"
#include "ospec/spectrum.hpp"

#include "json.hpp"

namespace ospec::jsonio {

using nlohmann::json;
using numtheory::Int;

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that, so no reader ever sees a rounded value.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json spectrum_to_json(const spectra::Spectrum& s);

json group_to_json(const catalog::GroupSpec& g);
catalog::GroupSpec group_from_json(const json& j);

json graph_to_json(const primegraph::PrimeGraph& g);
json coclique_to_json(const primegraph::CocliqueResult& r);

json certificate_to_json(const constructions::SequenceCertificate& c);
json report_to_json(const Report& r);

json field_to_json(const ffverify::Gf3Field& f);

}  // namespace ospec::jsonio
