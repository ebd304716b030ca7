#ifndef relcut_test_fixtures_hpp
#define relcut_test_fixtures_hpp

#include <string>
#include <vector>

#include "relcut/graph.hpp"

namespace relcut_test {

std::string fixture_path(const std::string& name);
relcut::Graph fixture(const std::string& name);

// every fixture in the data directory, sorted by name
std::vector<std::string> fixture_names();

// C_n with q = 0 and target n/2
relcut::Graph cycle_graph(int n);

// cycles of the given lengths glued at vertex 0 = q
relcut::Graph cactus(const std::vector<int>& lengths);

}

#endif
