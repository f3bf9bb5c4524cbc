#include "brunnian/pd_code.hpp"

#include <map>
#include <numeric>

#include <json.hpp>

namespace brunnian {

PDCode closure_pd(const BraidWord& b) {
    int m = b.strands();
    // Arc entering the braid box at the top of position p.
    std::vector<int> top(m), cur(m);
    std::iota(top.begin(), top.end(), 1);
    cur = top;
    int next_arc = m + 1;
    std::vector<PDCrossing> crossings;
    crossings.reserve(b.size());
    for (int l : b.letters()) {
        int i = l > 0 ? l : -l;
        int a = cur[i - 1];  // incoming at position i
        int bb = cur[i];     // incoming at position i+1
        int c = next_arc++;  // outgoing at position i
        int d = next_arc++;  // outgoing at position i+1
        PDCrossing x;
        if (l > 0) {
            // strand entering at position i goes under: a -> d, over: b -> c
            x.sign = 1;
            x.arcs = {a, c, d, bb};
        } else {
            x.sign = -1;
            x.arcs = {bb, a, c, d};
        }
        crossings.push_back(x);
        cur[i - 1] = c;
        cur[i] = d;
    }
    // Close up: the bottom arc of position p is the same arc as the top arc
    // of position p.  Union the labels and compact.
    std::vector<int> parent(next_arc);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int p = 0; p < m; ++p) parent[find(cur[p])] = find(top[p]);
    std::map<int, int> compact;
    auto label = [&](int v) {
        int r = find(v);
        auto it = compact.find(r);
        if (it == compact.end()) it = compact.emplace(r, static_cast<int>(compact.size()) + 1).first;
        return it->second;
    };
    for (PDCrossing& x : crossings)
        for (int& a : x.arcs) a = label(a);

    PDCode pd;
    pd.crossings = std::move(crossings);
    // Component count = cycles of the strand permutation.
    Perm perm = permutation_of(b);
    std::vector<bool> seen(m, false);
    int comps = 0;
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        ++comps;
        int t = s;
        while (!seen[t]) {
            seen[t] = true;
            t = perm[t] - 1;
        }
    }
    pd.components = comps;
    return pd;
}

std::string pd_to_json(const PDCode& pd, bool pretty) {
    nlohmann::ordered_json j;
    j["components"] = pd.components;
    j["crossings"] = nlohmann::ordered_json::array();
    for (const PDCrossing& x : pd.crossings) {
        nlohmann::ordered_json c;
        c["sign"] = x.sign;
        c["arcs"] = x.arcs;
        j["crossings"].push_back(c);
    }
    return pretty ? j.dump(2) : j.dump();
}

PDCode pd_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad PD JSON: ") + e.what());
    }
    PDCode pd;
    try {
        pd.components = j.at("components").get<int>();
        for (const auto& c : j.at("crossings")) {
            PDCrossing x;
            x.sign = c.at("sign").get<int>();
            auto arcs = c.at("arcs");
            if (arcs.size() != 4) throw parse_error("crossing needs 4 arcs");
            for (int k = 0; k < 4; ++k) x.arcs[k] = arcs[k].get<int>();
            if (x.sign != 1 && x.sign != -1) throw parse_error("crossing sign must be +1 or -1");
            pd.crossings.push_back(x);
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad PD JSON: ") + e.what());
    }
    return pd;
}

LinkRep link_from_braid(const BraidWord& b) {
    return LinkRep{b, closure_pd(b)};
}

}  // namespace brunnian
