#include "idealgraph/planarity.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>

namespace idealgraph {

namespace {

struct LocalGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<unsigned char>> mat;

    explicit LocalGraph(int n_) : n(n_), adj(n_), mat(n_, std::vector<unsigned char>(n_, 0)) {}

    void add_edge(int u, int v) {
        if (mat[u][v]) return;
        mat[u][v] = mat[v][u] = 1;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
};

// Any cycle of a 2-connected graph, found via DFS back edge.
std::vector<int> find_cycle(const LocalGraph& g) {
    std::vector<int> parent(g.n, -1), depth(g.n, -1);
    std::vector<int> stack{0};
    depth[0] = 0;
    std::vector<std::size_t> iter(g.n, 0);
    while (!stack.empty()) {
        int v = stack.back();
        if (iter[v] < g.adj[v].size()) {
            int w = g.adj[v][iter[v]++];
            if (depth[w] == -1) {
                parent[w] = v;
                depth[w] = depth[v] + 1;
                stack.push_back(w);
            } else if (w != parent[v] && depth[w] < depth[v]) {
                std::vector<int> cycle;
                for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
                cycle.push_back(w);
                return cycle;
            }
        } else {
            stack.pop_back();
        }
    }
    throw std::logic_error("find_cycle: acyclic block");
}

struct Face {
    std::vector<int> cycle;
    std::vector<char> has;
};

struct Fragment {
    std::vector<int> attachments;
    bool single_edge = false;
    int eu = -1, ev = -1;  // when single_edge
    int comp_id = -1;      // index into component vertex lists otherwise
};

// Demoucron-Malgrange-Pertuiset planar embedding of a 2-connected graph
// with at least 3 vertices. Returns the rotation system, or nothing when
// the graph is nonplanar.
std::optional<std::vector<std::vector<int>>> dmp_embed(const LocalGraph& g) {
    const int n = g.n;
    std::vector<char> in_h(n, 0);
    std::vector<std::vector<unsigned char>> used(n, std::vector<unsigned char>(n, 0));

    auto use_edge = [&](int u, int v) { used[u][v] = used[v][u] = 1; };
    auto make_face = [&](std::vector<int> cycle) {
        Face f;
        f.has.assign(n, 0);
        for (int v : cycle) f.has[v] = 1;
        f.cycle = std::move(cycle);
        return f;
    };

    std::vector<int> start = find_cycle(g);
    for (std::size_t i = 0; i < start.size(); ++i) {
        in_h[start[i]] = 1;
        use_edge(start[i], start[(i + 1) % start.size()]);
    }
    std::vector<Face> faces;
    faces.push_back(make_face(start));
    std::vector<int> rev(start.rbegin(), start.rend());
    faces.push_back(make_face(rev));

    while (true) {
        // fragments: chords between embedded vertices, and components of
        // not-yet-embedded vertices with their attachments
        std::vector<Fragment> fragments;
        for (int u = 0; u < n; ++u) {
            if (!in_h[u]) continue;
            for (int v : g.adj[u]) {
                if (u < v && in_h[v] && !used[u][v]) {
                    Fragment f;
                    f.single_edge = true;
                    f.eu = u;
                    f.ev = v;
                    f.attachments = {u, v};
                    fragments.push_back(std::move(f));
                }
            }
        }
        std::vector<int> comp_of(n, -1);
        std::vector<std::vector<int>> comps;
        for (int s = 0; s < n; ++s) {
            if (in_h[s] || comp_of[s] != -1) continue;
            int id = static_cast<int>(comps.size());
            comps.emplace_back();
            std::vector<int> bfs{s};
            comp_of[s] = id;
            while (!bfs.empty()) {
                int v = bfs.back();
                bfs.pop_back();
                comps[id].push_back(v);
                for (int w : g.adj[v]) {
                    if (!in_h[w] && comp_of[w] == -1) {
                        comp_of[w] = id;
                        bfs.push_back(w);
                    }
                }
            }
        }
        for (int id = 0; id < static_cast<int>(comps.size()); ++id) {
            Fragment f;
            f.comp_id = id;
            std::vector<char> att(n, 0);
            for (int v : comps[id]) {
                for (int w : g.adj[v]) {
                    if (in_h[w]) att[w] = 1;
                }
            }
            for (int v = 0; v < n; ++v) {
                if (att[v]) f.attachments.push_back(v);
            }
            if (f.attachments.size() < 2) {
                throw std::logic_error("dmp_embed: fragment with < 2 attachments in a 2-connected block");
            }
            fragments.push_back(std::move(f));
        }
        if (fragments.empty()) break;

        // admissibility; a fragment with no admissible face proves nonplanarity
        int best = -1, best_count = -1, best_face = -1;
        for (std::size_t fi = 0; fi < fragments.size(); ++fi) {
            int count = 0, first = -1;
            for (std::size_t k = 0; k < faces.size(); ++k) {
                bool ok = true;
                for (int a : fragments[fi].attachments) {
                    if (!faces[k].has[a]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    ++count;
                    if (first == -1) first = static_cast<int>(k);
                }
            }
            if (count == 0) return std::nullopt;
            if (best == -1 || count < best_count) {
                best = static_cast<int>(fi);
                best_count = count;
                best_face = first;
                if (best_count == 1) break;
            }
        }

        // alpha-path between two attachments through the fragment
        const Fragment& frag = fragments[best];
        std::vector<int> path;
        if (frag.single_edge) {
            path = {frag.eu, frag.ev};
        } else {
            int a = frag.attachments[0], b = frag.attachments[1];
            std::vector<int> parent(n, -2);
            std::vector<int> queue{a};
            parent[a] = -1;
            int hit = -1;
            for (std::size_t qi = 0; qi < queue.size() && hit == -1; ++qi) {
                int v = queue[qi];
                for (int w : g.adj[v]) {
                    if (w == b && v != a) {
                        parent[b] = v;
                        hit = b;
                        break;
                    }
                    if (!in_h[w] && comp_of[w] == frag.comp_id && parent[w] == -2) {
                        parent[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            if (hit == -1) throw std::logic_error("dmp_embed: no alpha-path through fragment");
            for (int x = b; x != -1; x = parent[x]) path.push_back(x);
            std::reverse(path.begin(), path.end());
        }

        // split the admissible face along the path
        Face face = std::move(faces[best_face]);
        const auto& cyc = face.cycle;
        const int len = static_cast<int>(cyc.size());
        int ia = -1, ib = -1;
        for (int t = 0; t < len; ++t) {
            if (cyc[t] == path.front()) ia = t;
            if (cyc[t] == path.back()) ib = t;
        }
        if (ia < 0 || ib < 0 || ia == ib) throw std::logic_error("dmp_embed: attachments not on face");
        std::vector<int> walk_a, walk_b;
        for (int t = ia; t != ib; t = (t + 1) % len) walk_a.push_back(cyc[t]);
        walk_a.push_back(cyc[ib]);
        for (int t = ib; t != ia; t = (t + 1) % len) walk_b.push_back(cyc[t]);
        walk_b.push_back(cyc[ia]);
        std::vector<int> interior(path.begin() + 1, path.end() - 1);
        std::vector<int> f1 = walk_a, f2 = walk_b;
        f1.insert(f1.end(), interior.rbegin(), interior.rend());
        f2.insert(f2.end(), interior.begin(), interior.end());

        faces[best_face] = make_face(std::move(f1));
        faces.push_back(make_face(std::move(f2)));
        for (std::size_t t = 0; t + 1 < path.size(); ++t) use_edge(path[t], path[t + 1]);
        for (int v : path) in_h[v] = 1;
    }

    // rotation from the face walks: in each face, the edge after (u -> v)
    // is (v -> w), so w follows u in the rotation at v
    std::vector<std::vector<int>> succ(n);
    for (int v = 0; v < n; ++v) succ[v].assign(n, -1);
    for (const Face& f : faces) {
        const int len = static_cast<int>(f.cycle.size());
        for (int t = 0; t < len; ++t) {
            int u = f.cycle[t];
            int v = f.cycle[(t + 1) % len];
            int w = f.cycle[(t + 2) % len];
            if (succ[v][u] != -1) throw std::logic_error("dmp_embed: duplicate face successor");
            succ[v][u] = w;
        }
    }
    std::vector<std::vector<int>> rotation(n);
    for (int v = 0; v < n; ++v) {
        if (g.adj[v].empty()) continue;
        int u0 = g.adj[v][0];
        int u = u0;
        do {
            rotation[v].push_back(u);
            u = succ[v][u];
            if (u == -1) throw std::logic_error("dmp_embed: broken rotation chain");
        } while (u != u0 && rotation[v].size() <= g.adj[v].size());
        if (rotation[v].size() != g.adj[v].size()) {
            throw std::logic_error("dmp_embed: rotation does not cover all neighbors");
        }
    }
    return rotation;
}

// Embed every block independently and splice rotations at cut vertices.
std::optional<Embedding> embed_by_blocks(const Graph& g) {
    Embedding emb;
    emb.rotation.assign(g.order(), {});
    for (const auto& block : biconnected_components(g)) {
        std::vector<int> verts;
        for (auto [u, v] : block) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (block.size() == 1) {
            auto [u, v] = block.front();
            emb.rotation[u].push_back(v);
            emb.rotation[v].push_back(u);
            continue;
        }
        std::vector<int> local_of(g.order(), -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = static_cast<int>(i);
        LocalGraph lg(static_cast<int>(verts.size()));
        for (auto [u, v] : block) lg.add_edge(local_of[u], local_of[v]);
        auto rot = dmp_embed(lg);
        if (!rot) return std::nullopt;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (int w : (*rot)[i]) emb.rotation[verts[i]].push_back(verts[w]);
        }
    }
    return emb;
}

// One pass suffices: an edge kept because its removal made the graph planar
// stays unremovable as the graph only shrinks.
Graph minimize_preserving(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                          const auto& still_bad) {
    std::vector<char> alive(edges.size(), 1);
    auto build = [&]() {
        Graph h(g.order());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (alive[i]) h.add_edge(edges[i].first, edges[i].second);
        }
        return h;
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        alive[i] = 0;
        if (!still_bad(build())) alive[i] = 1;
    }
    return build();
}

// Walk maximal degree-2 chains of a bare subdivision between branch vertices.
std::vector<std::vector<int>> subdivision_paths(const Graph& h, const std::vector<char>& is_branch) {
    std::vector<std::vector<unsigned char>> walked(h.order(),
                                                   std::vector<unsigned char>(h.order(), 0));
    std::vector<std::vector<int>> paths;
    for (int b = 0; b < h.order(); ++b) {
        if (!is_branch[b]) continue;
        for (int u : h.neighbors(b)) {
            if (walked[b][u]) continue;
            std::vector<int> path{b};
            int prev = b, cur = u;
            walked[b][u] = walked[u][b] = 1;
            while (!is_branch[cur]) {
                if (h.degree(cur) != 2) throw std::logic_error("subdivision_paths: stray vertex");
                path.push_back(cur);
                int nxt = h.neighbors(cur)[0] == prev ? h.neighbors(cur)[1] : h.neighbors(cur)[0];
                walked[cur][nxt] = walked[nxt][cur] = 1;
                prev = cur;
                cur = nxt;
            }
            path.push_back(cur);
            paths.push_back(std::move(path));
        }
    }
    return paths;
}

ForbiddenSubdivision classify_kuratowski(const Graph& h) {
    std::vector<int> branch;
    for (int v = 0; v < h.order(); ++v) {
        if (h.degree(v) >= 3) branch.push_back(v);
    }
    ForbiddenSubdivision fs;
    if (branch.size() == 5) {
        fs.kind = SubdivisionKind::K5;
        fs.branch_vertices = branch;
    } else if (branch.size() == 6) {
        fs.kind = SubdivisionKind::K33;
    } else {
        throw std::logic_error("classify_kuratowski: unexpected branch count");
    }
    std::vector<char> is_branch(h.order(), 0);
    for (int v : branch) is_branch[v] = 1;
    fs.paths = subdivision_paths(h, is_branch);
    if (fs.kind == SubdivisionKind::K33) {
        // bipartition: two branch vertices are on the same side iff no path joins them
        std::vector<std::vector<char>> joined(h.order(), std::vector<char>(h.order(), 0));
        for (const auto& p : fs.paths) joined[p.front()][p.back()] = joined[p.back()][p.front()] = 1;
        std::vector<int> side_a{branch[0]}, side_b;
        for (std::size_t i = 1; i < branch.size(); ++i) {
            (joined[branch[0]][branch[i]] ? side_b : side_a).push_back(branch[i]);
        }
        if (side_a.size() != 3 || side_b.size() != 3) {
            throw std::logic_error("classify_kuratowski: K33 sides malformed");
        }
        fs.branch_vertices = side_a;
        fs.branch_vertices.insert(fs.branch_vertices.end(), side_b.begin(), side_b.end());
    }
    return fs;
}

ForbiddenSubdivision classify_outerplanar_obstruction(const Graph& h) {
    std::vector<int> branch;
    for (int v = 0; v < h.order(); ++v) {
        if (h.degree(v) >= 3) branch.push_back(v);
    }
    std::vector<char> is_branch(h.order(), 0);
    for (int v : branch) is_branch[v] = 1;
    auto paths = subdivision_paths(h, is_branch);
    ForbiddenSubdivision fs;
    if (branch.size() == 4) {
        fs.kind = SubdivisionKind::K4;
        fs.branch_vertices = branch;
        fs.paths = std::move(paths);
        return fs;
    }
    if (branch.size() != 2 || paths.size() != 3) {
        throw std::logic_error("classify_outerplanar_obstruction: unexpected shape");
    }
    // theta with all three paths of length >= 2: split each at its first
    // internal vertex to exhibit the K23 pattern
    fs.kind = SubdivisionKind::K23;
    const int a = branch[0], b = branch[1];
    fs.branch_vertices = {a, b};
    for (auto& p : paths) {
        if (p.front() != a) std::reverse(p.begin(), p.end());
        if (p.size() < 3) throw std::logic_error("classify_outerplanar_obstruction: chordal theta");
        int mid = p[1];
        fs.branch_vertices.push_back(mid);
        fs.paths.push_back({a, mid});
        fs.paths.push_back(std::vector<int>(p.begin() + 1, p.end()));
    }
    return fs;
}

bool verify_embedding(const Graph& g, const Embedding& emb) {
    const int n = g.order();
    if (static_cast<int>(emb.rotation.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        std::vector<int> a = emb.rotation[v];
        std::vector<int> b = g.neighbors(v);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
    }
    // directed edge (u, i) = i-th entry of rotation[u]; trace faces
    std::vector<int> start(n + 1, 0);
    for (int v = 0; v < n; ++v) start[v + 1] = start[v] + g.degree(v);
    std::vector<int> pos_flat(static_cast<std::size_t>(n) * n, -1);
    auto pos = [&](int v, int u) -> int& { return pos_flat[static_cast<std::size_t>(v) * n + u]; };
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < g.degree(v); ++i) pos(v, emb.rotation[v][i]) = i;
    }
    const int dedges = 2 * g.size();
    std::vector<char> seen(dedges, 0);
    std::vector<int> comp = g.component_ids();
    int comp_total = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> face_of_comp(comp_total, 0), vcount(comp_total, 0), ecount(comp_total, 0);
    for (int v = 0; v < n; ++v) {
        ++vcount[comp[v]];
        ecount[comp[v]] += g.degree(v);
    }
    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < g.degree(u); ++i) {
            if (seen[start[u] + i]) continue;
            ++face_of_comp[comp[u]];
            int cu = u, ci = i;
            std::size_t steps = 0;
            do {
                seen[start[cu] + ci] = 1;
                int cv = emb.rotation[cu][ci];
                int j = (pos(cv, cu) + 1) % g.degree(cv);
                cu = cv;
                ci = j;
                if (++steps > static_cast<std::size_t>(dedges)) return false;
            } while (!seen[start[cu] + ci]);
        }
    }
    for (int c = 0; c < comp_total; ++c) {
        int e = ecount[c] / 2;
        if (e == 0) {
            if (face_of_comp[c] != 0) return false;
        } else if (vcount[c] - e + face_of_comp[c] != 2) {
            return false;
        }
    }
    return true;
}

bool verify_subdivision(const Graph& g, const ForbiddenSubdivision& fs) {
    const int n = g.order();
    const auto& branch = fs.branch_vertices;
    std::size_t want_branch = 0;
    std::vector<std::pair<int, int>> want_pairs;  // indices into branch
    switch (fs.kind) {
        case SubdivisionKind::K5:
            want_branch = 5;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) want_pairs.emplace_back(i, j);
            break;
        case SubdivisionKind::K33:
            want_branch = 6;
            for (int i = 0; i < 3; ++i)
                for (int j = 3; j < 6; ++j) want_pairs.emplace_back(i, j);
            break;
        case SubdivisionKind::K4:
            want_branch = 4;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) want_pairs.emplace_back(i, j);
            break;
        case SubdivisionKind::K23:
            want_branch = 5;
            for (int i = 0; i < 2; ++i)
                for (int j = 2; j < 5; ++j) want_pairs.emplace_back(i, j);
            break;
    }
    if (branch.size() != want_branch || fs.paths.size() != want_pairs.size()) return false;
    std::vector<int> which(n, -1);  // branch index per vertex
    for (std::size_t i = 0; i < branch.size(); ++i) {
        int v = branch[i];
        if (v < 0 || v >= n || which[v] != -1) return false;
        which[v] = static_cast<int>(i);
    }
    std::vector<char> internal_used(n, 0);
    std::vector<char> pair_seen(want_branch * want_branch, 0);
    for (const auto& path : fs.paths) {
        if (path.size() < 2) return false;
        int a = path.front(), b = path.back();
        if (a < 0 || b < 0 || a >= n || b >= n) return false;
        if (which[a] == -1 || which[b] == -1) return false;
        std::vector<char> in_path(n, 0);
        for (std::size_t t = 0; t < path.size(); ++t) {
            int v = path[t];
            if (v < 0 || v >= n || in_path[v]) return false;
            in_path[v] = 1;
            if (t > 0 && !g.adjacent(path[t - 1], v)) return false;
            if (t > 0 && t + 1 < path.size()) {
                if (which[v] != -1) return false;       // interior hits a branch vertex
                if (internal_used[v]) return false;     // shared interior across paths
                internal_used[v] = 1;
            }
        }
        int i = std::min(which[a], which[b]), j = std::max(which[a], which[b]);
        bool expected = false;
        for (auto [x, y] : want_pairs) {
            if (x == i && y == j) expected = true;
        }
        if (!expected) return false;
        if (pair_seen[i * want_branch + j]) return false;
        pair_seen[i * want_branch + j] = 1;
    }
    for (auto [x, y] : want_pairs) {
        if (!pair_seen[x * want_branch + y]) return false;
    }
    return true;
}

}  // namespace

bool is_planar_quick(const Graph& g) {
    if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return false;
    return embed_by_blocks(g).has_value();
}

PlanarityResult is_planar(const Graph& g) {
    PlanarityResult res;
    std::optional<Embedding> emb;
    if (g.order() < 3 || g.size() <= 3 * g.order() - 6) emb = embed_by_blocks(g);
    if (emb) {
        res.planar = true;
        res.certificate = std::move(*emb);
        return res;
    }
    res.planar = false;
    Graph h = minimize_preserving(g, g.edges(), [](const Graph& k) { return !is_planar_quick(k); });
    res.certificate = classify_kuratowski(h);
    return res;
}

bool verify_certificate(const Graph& g, const PlanarityCertificate& cert) {
    if (const auto* emb = std::get_if<Embedding>(&cert)) return verify_embedding(g, *emb);
    return verify_subdivision(g, std::get<ForbiddenSubdivision>(cert));
}

int face_count(const Graph& g) { return 1 + g.component_count() - g.order() + g.size(); }

Graph apex_extension(const Graph& g) {
    const int n = g.order();
    Graph h(n + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int v = 0; v < n; ++v) h.add_edge(n, v);
    return h;
}

bool is_outerplanar(const Graph& g) { return is_planar_quick(apex_extension(g)); }

std::optional<ForbiddenSubdivision> outerplanar_obstruction(const Graph& g) {
    if (is_outerplanar(g)) return std::nullopt;
    Graph h = minimize_preserving(g, g.edges(), [](const Graph& k) { return !is_outerplanar(k); });
    return classify_outerplanar_obstruction(h);
}

const char* subdivision_kind_name(SubdivisionKind kind) {
    switch (kind) {
        case SubdivisionKind::K5: return "K5";
        case SubdivisionKind::K33: return "K3,3";
        case SubdivisionKind::K4: return "K4";
        case SubdivisionKind::K23: return "K2,3";
    }
    return "?";
}

}  // namespace idealgraph
