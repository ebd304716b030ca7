#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>

namespace relcut_test {

using namespace relcut;

std::string fixture_path(const std::string& name) {
    return std::string(RELCUT_DATA_DIR) + "/" + name + ".g";
}

Graph fixture(const std::string& name) {
    return read_graph_file(fixture_path(name));
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& entry : std::filesystem::directory_iterator(RELCUT_DATA_DIR)) {
        if (entry.path().extension() == ".g") {
            names.push_back(entry.path().stem().string());
        }
    }
    std::sort(names.begin(), names.end());
    return names;
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i + 1, i, (i + 1) % n, false});
    }
    return Graph(n, edges, 0, {n / 2});
}

Graph cactus(const std::vector<int>& lengths) {
    std::vector<Edge> edges;
    int next = 1;
    for (int len : lengths) {
        int prev = 0;
        for (int i = 0; i + 1 < len; ++i) {
            int id = static_cast<int>(edges.size()) + 1;
            edges.push_back({id, prev, next, false});
            prev = next++;
        }
        int id = static_cast<int>(edges.size()) + 1;
        edges.push_back({id, prev, 0, false});
    }
    return Graph(next, edges, 0, {next - 1});
}

}
