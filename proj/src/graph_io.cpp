#include "minors/graph_io.hpp"

#include <istream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace minors {

namespace {

constexpr int kBias = 63;  // graph6 printable offset

void append_n(std::string& out, long long n) {
    if (n < 0) throw std::invalid_argument("negative order");
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

long long parse_n(const std::string& s, std::size_t& pos) {
    auto val = [&](std::size_t i) -> long long {
        if (i >= s.size() || s[i] < 63 || s[i] > 126)
            throw std::invalid_argument("malformed graph6 header");
        return s[i] - kBias;
    };
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    if (s[pos] != 126) return val(pos++);
    ++pos;
    if (pos < s.size() && s[pos] == 126) {
        ++pos;
        long long n = 0;
        for (int i = 0; i < 6; ++i) n = (n << 6) | val(pos++);
        return n;
    }
    long long n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | val(pos++);
    return n;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const auto& vs = g.vertices();
    std::unordered_map<int, int> index;
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
    long long n = g.num_vertices();
    std::string out;
    append_n(out, n);
    int bit = 5;
    char cur = 0;
    for (long long j = 1; j < n; ++j) {
        for (long long i = 0; i < j; ++i) {
            if (g.has_edge(vs[i], vs[j])) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + kBias));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (n >= 2 && bit != 5) out.push_back(static_cast<char>(cur + kBias));
    return out;
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    std::size_t pos = 0;
    long long n = parse_n(s, pos);
    std::vector<Edge> edges;
    int bit = 5;
    for (long long j = 1; j < n; ++j) {
        for (long long i = 0; i < j; ++i) {
            if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
            char c = s[pos];
            if (c < 63 || c > 126) throw std::invalid_argument("bad graph6 character");
            if (((c - kBias) >> bit) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            if (--bit < 0) {
                bit = 5;
                ++pos;
            }
        }
    }
    return Graph::make(static_cast<int>(n), edges);
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long m;
            if (!(ls >> kind >> n >> m)) throw std::invalid_argument("malformed DIMACS problem line");
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw std::invalid_argument("malformed DIMACS edge line");
            edges.emplace_back(u - 1, v - 1);
        }
    }
    if (n < 0) throw std::invalid_argument("DIMACS input has no problem line");
    return Graph::make(n, edges);
}

std::string to_json(const Graph& g) {
    nlohmann::json j;
    const auto& vs = g.vertices();
    bool contiguous = true;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i] != static_cast<int>(i)) {
            contiguous = false;
            break;
        }
    if (contiguous)
        j["n"] = g.num_vertices();
    else
        j["vertices"] = vs;
    auto& je = j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) je.push_back({u, v});
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge entries must be pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("vertices"))
        return Graph::from_vertices(j["vertices"].get<std::vector<int>>(), edges);
    return Graph::make(j.at("n").get<int>(), edges);
}

Graph read_graph(std::istream& in, GraphFormat fmt) {
    if (fmt == GraphFormat::dimacs) return read_dimacs(in);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (fmt == GraphFormat::json) return graph_from_json(text);
    return from_graph6(text);
}

std::string write_graph(const Graph& g, GraphFormat fmt) {
    switch (fmt) {
        case GraphFormat::graph6:
            return to_graph6(g);
        case GraphFormat::json:
            return to_json(g);
        case GraphFormat::dimacs: {
            std::ostringstream out;
            std::unordered_map<int, int> index;
            const auto& vs = g.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
            out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
            for (const auto& [u, v] : g.edges()) out << "e " << index[u] + 1 << " " << index[v] + 1 << "\n";
            return out.str();
        }
    }
    throw std::invalid_argument("unknown format");
}

}  // namespace minors
