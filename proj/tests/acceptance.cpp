// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures (capped at 100). --json prints the detail records as well;
// numeric arguments select criteria.

#include "cuspidor/suite.hpp"

#include <cstdio>
#include <cstring>
#include <iostream>

using namespace cuspidor;

int main(int argc, char** argv) {
	bool dump = false;
	std::vector<int> ids;
	for (int i = 1; i < argc; ++i) {
		if (std::strcmp(argv[i], "--json") == 0)
			dump = true;
		else
			ids.push_back(std::atoi(argv[i]));
	}
	if (ids.empty())
		for (int i = 1; i <= criterion_count(); ++i)
			ids.push_back(i);

	int failures = 0;
	json all = json::array();
	for (int id : ids) {
		CriterionResult r;
		try {
			r = run_criterion(id);
		} catch (const DomainError& e) {
			r.id = id;
			r.title = "error";
			r.detail = {{"error", e.code()}, {"message", e.what()}};
		}
		failures += !r.pass;
		std::printf("%s %2d  %-66s %7.2fs", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
		if (r.limit > 0)
			std::printf(" (limit %.0fs)", r.limit);
		std::printf("\n");
		std::fflush(stdout);
		if (dump)
			all.push_back({{"id", r.id}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
	}
	if (dump)
		std::cout << all.dump(2) << '\n';
	return failures > 100 ? 100 : failures;
}
