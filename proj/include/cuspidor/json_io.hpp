#pragma once
// JSON encoding of the exact types. Rationals are strings "a/b" (or "a"),
// integers are JSON numbers when they fit in 64 bits and strings otherwise,
// cyclotomic numbers are {conductor, coeffs} over the minimal conductor.

#include "cuspidor/character_formula.hpp"
#include "cuspidor/clifford.hpp"
#include "cuspidor/cocycle.hpp"
#include "cuspidor/dual_centralizer.hpp"
#include "cuspidor/torus.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace cuspidor {

using json = nlohmann::ordered_json;

json to_json(const Int& x);
json to_json(const Rat& x);
json to_json(const IntVec& v);
json to_json(const QVec& v);
json to_json(const IntMatrix& m);
json to_json(const Cyclotomic& c);
json to_json(const std::vector<Int>& v, bool as_list);

// Throws DomainError("InvalidJson") on malformed input.
Int int_from_json(const json& j);
Rat rat_from_json(const json& j);
IntVec intvec_from_json(const json& j);
QVec qvec_from_json(const json& j);
IntMatrix matrix_from_json(const json& j);
Cyclotomic cyclotomic_from_json(const json& j);

// Root data: either a reference {type, n, lattice: "sc"|"adjoint"} or an
// explicit {label, rank, roots, coroots, simple}.
json root_datum_to_json(const RootDatum& rd);
RootDatum root_datum_from_json(const json& j);

json extension_to_json(const ExtensionDescriptor& e);
ExtensionDescriptor extension_from_json(const json& j);

json parameter_datum_to_json(const ParameterDatum& d);
ParameterDatum parameter_datum_from_json(const json& j);
bool same_datum(const ParameterDatum& a, const ParameterDatum& b);

// {group: {abelian: [d_i]} | {table: [...], order}, npoints, action, eta: [[x,y,z,"r"], ...]}
json family_to_json(const EtaFamily& f);
EtaFamily family_from_json(const json& j);

// Reports
json centralizer_to_json(const CentralizerReport& r);
json d2n_to_json(const D2nReport& r);
json census_to_json(const Census& c);
json chi_data_to_json(const ChiData& chi);
json mod_a_to_json(const ModAData& a);
json delta_to_json(const DeltaReport& d);
json theta_sum_to_json(const ThetaSumReport& r);

std::string fixture_path(const std::string& name);
json load_json_file(const std::string& path);
json load_fixture(const std::string& name);

} // namespace cuspidor
