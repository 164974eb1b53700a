#include "tdfc/families.hpp"

#include "tdfc/errors.hpp"

#include <numeric>
#include <sstream>

namespace tdfc {

FamilySpec FamilySpec::linear(int n) {
    FamilySpec s;
    s.kind = Kind::Linear;
    s.n = n;
    s.validate();
    return s;
}

FamilySpec FamilySpec::ccs(int n) {
    FamilySpec s;
    s.kind = Kind::Ccs;
    s.n = n;
    s.validate();
    return s;
}

FamilySpec FamilySpec::tcs(int a, int d) {
    FamilySpec s;
    s.kind = Kind::Tcs;
    s.branching = a;
    s.depth = d;
    s.validate();
    return s;
}

FamilySpec FamilySpec::lattice(std::vector<int> dims) {
    FamilySpec s;
    s.kind = Kind::Lattice;
    s.dims = std::move(dims);
    s.validate();
    return s;
}

void FamilySpec::validate() const {
    switch (kind) {
        case Kind::Linear:
        case Kind::Ccs:
            if (n < 1) throw InvalidSpec("family size N must be >= 1");
            break;
        case Kind::Tcs:
            if (branching < 2) throw InvalidSpec("tree branching factor must be >= 2");
            if (depth < 1) throw InvalidSpec("tree depth must be >= 1");
            break;
        case Kind::Lattice:
            if (dims.empty()) throw InvalidSpec("lattice needs at least one extent");
            for (int e : dims) {
                if (e < 1) throw InvalidSpec("lattice extents must be >= 1");
            }
            break;
    }
}

FamilySpec FamilySpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ParseError("family spec needs 'name:params', got '" + text + "'");
    }
    const std::string name = text.substr(0, colon);
    const std::string params = text.substr(colon + 1);

    auto parse_int = [&](const std::string& tok) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw ParseError("");
            return v;
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + tok + "' in family spec '" + text + "'");
        }
    };
    auto split = [&](char sep) {
        std::vector<int> out;
        std::stringstream ss(params);
        std::string tok;
        while (std::getline(ss, tok, sep)) out.push_back(parse_int(tok));
        return out;
    };

    try {
        if (name == "linear") return linear(parse_int(params));
        if (name == "ccs") return ccs(parse_int(params));
        if (name == "tcs") {
            const auto v = split(',');
            if (v.size() != 2) throw ParseError("tcs needs 'tcs:a,d'");
            return tcs(v[0], v[1]);
        }
        if (name == "lattice") return lattice(split('x'));
    } catch (const InvalidSpec& e) {
        throw ParseError(std::string("invalid family parameters: ") + e.what());
    }
    throw ParseError("unknown family '" + name + "'");
}

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Linear: os << "linear:" << n; break;
        case Kind::Ccs: os << "ccs:" << n; break;
        case Kind::Tcs: os << "tcs:" << branching << "," << depth; break;
        case Kind::Lattice:
            os << "lattice:";
            for (std::size_t i = 0; i < dims.size(); ++i) {
                if (i) os << 'x';
                os << dims[i];
            }
            break;
    }
    return os.str();
}

int tcs_node_count(int a, int d) {
    long long total = 0, layer = 1;
    for (int l = 0; l < d; ++l) {
        total += layer;
        layer *= a;
        if (total > 1'000'000) throw Overflow("tree too large");
    }
    return static_cast<int>(total);
}

std::vector<int> tcs_children(int a, int d, int k) {
    const int n = tcs_node_count(a, d);
    std::vector<int> out;
    for (int c = a * k - (a - 2); c <= a * k + 1; ++c) {
        if (c >= 1 && c <= n) out.push_back(c);
    }
    return out;
}

int tcs_parent(int a, int k) {
    return (k + (a - 2)) / a;
}

int tcs_layer(int a, int k) {
    int layer = 1, first = 1, count = 1;
    while (k >= first + count) {
        first += count;
        count *= a;
        ++layer;
    }
    return layer;
}

ClusterGraph build_family(const FamilySpec& spec) {
    spec.validate();
    std::set<int> excited;
    std::set<Edge> edges;
    int n = 0;

    switch (spec.kind) {
        case FamilySpec::Kind::Linear:
            n = spec.n;
            for (int i = 1; i < n; ++i) edges.insert({i, i + 1});
            break;
        case FamilySpec::Kind::Ccs:
            n = spec.n;
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) edges.insert({i, j});
            }
            break;
        case FamilySpec::Kind::Tcs: {
            n = tcs_node_count(spec.branching, spec.depth);
            for (int k = 1; k <= n; ++k) {
                for (int c : tcs_children(spec.branching, spec.depth, k)) {
                    edges.insert({k, c});
                }
            }
            break;
        }
        case FamilySpec::Kind::Lattice: {
            n = std::accumulate(spec.dims.begin(), spec.dims.end(), 1,
                                [](int acc, int e) { return acc * e; });
            // Row-major rasterization; neighbors along each axis.
            std::vector<int> stride(spec.dims.size(), 1);
            for (std::size_t ax = 1; ax < spec.dims.size(); ++ax) {
                stride[ax] = stride[ax - 1] * spec.dims[ax - 1];
            }
            for (int s = 0; s < n; ++s) {
                int rem = s;
                for (std::size_t ax = 0; ax < spec.dims.size(); ++ax) {
                    const int coord = rem % spec.dims[ax];
                    rem /= spec.dims[ax];
                    if (coord + 1 < spec.dims[ax]) {
                        edges.insert({s + 1, s + 1 + stride[ax]});
                    }
                }
            }
            break;
        }
    }

    for (int i = 1; i <= n; ++i) excited.insert(i);
    return ClusterGraph(n, std::move(excited), std::move(edges));
}

}  // namespace tdfc
