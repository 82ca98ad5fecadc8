// Regenerates fixtures/*.json from the library constructions.
// usage: cuspidor-gen-fixtures [output-dir]

#include "cuspidor/json_io.hpp"

#include <fstream>
#include <iostream>

using namespace cuspidor;

static void write(const std::string& dir, const std::string& name, const json& j) {
	std::ofstream out(dir + "/" + name);
	out << j.dump(1, '\t') << '\n';
	std::cout << dir << "/" << name << '\n';
}

int main(int argc, char** argv) {
	std::string dir = argc > 1 ? argv[1] : CUSPIDOR_FIXTURE_DIR;
	try {
		{
			json j;
			j["kind"] = "parameter";
			j["datum"] = parameter_datum_to_json(spin9_datum());
			j["expected"] = {{"fixed_order", 16}, {"omega_order", 2}, {"order", 32}, {"mult_one", true}};
			write(dir, "spin9.json", j);
		}
		{
			json j;
			j["kind"] = "parameter";
			j["datum"] = parameter_datum_to_json(biquadratic_datum_derivation());
			j["expected"] = {{"omega_order", 4},
			                 {"commutator", {{"epsilon", "0"}, {"eta", "0"}, {"delta", "1/2"}}},
			                 {"mult_one", false}};
			write(dir, "biquadratic.json", j);
		}
		{
			json j;
			j["kind"] = "extension";
			j["extension"] = extension_to_json(quaternion_extension());
			j["expected"] = {{"dimensions", {{"1", 4}, {"2", 1}}}, {"central_multiplicity", 2}, {"mult_one", false}};
			write(dir, "q8.json", j);
		}
		{
			json cases = json::array();
			for (long n : {2L, 3L, 4L})
				for (long q : {1L, 3L, 5L, 7L, 9L, 11L})
					for (const auto& c : d2n_cycle_types(n))
						cases.push_back({{"n", n}, {"q", q}, {"cycles", c}, {"commutator_trivial", true}});
			write(dir, "d2n.json", {{"kind", "d2n"}, {"cases", cases}});
		}
	} catch (const DomainError& e) {
		std::cerr << e.code() << ": " << e.what() << '\n';
		return 1;
	}
	return 0;
}
