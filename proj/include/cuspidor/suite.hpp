#pragma once
// Acceptance runners and the sweeps behind them. Each runner returns its
// verdict together with a JSON detail record.

#include "cuspidor/json_io.hpp"

namespace cuspidor {

struct CriterionResult {
	int id = 0;
	std::string title;
	bool pass = false;
	double seconds = 0;
	double limit = 0; // seconds, 0 for none
	json detail;
};

// Every classical datum of rank ≤ max_rank (sc and adjoint), each Weyl class
// and q in qs: non-singular θ, their stabilizers and the bicharacter kernel.
json bicharacter_sweep(const std::vector<long>& qs, std::size_t max_rank = 3);
// Simply connected D4 at w = −1: non-singular θ with stabilizer (Z/2)².
json d4_klein_check(long q = 5);
// SL2 packet sizes against extension counts and |Ω_θ|.
json packet_sweep(const std::vector<long>& qs);
// has_multiplicity_one against the brute-force census on random extensions.
json mult_one_sweep(std::uint64_t seed, std::size_t count, std::size_t max_order = 256);
json gauss_sweep(long max_q = 121);
json cocycle_sweep(std::uint64_t seed);
json d2n_sweep();

int criterion_count();
CriterionResult run_criterion(int id);

} // namespace cuspidor
