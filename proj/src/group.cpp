#include "hurwitz/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hurwitz {

namespace {

constexpr int kMaxOrder = 512;
constexpr int kMaxPermDegree = 16;
constexpr int kAutOrderCap = 64;

std::string default_label(int i) { return "g" + std::to_string(i); }

std::string cycle_label(const std::vector<int>& perm) {
    std::ostringstream os;
    std::vector<bool> seen(perm.size(), false);
    bool any = false;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == int(i)) continue;
        any = true;
        os << '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ' ';
            os << (j + 1);
            first = false;
            j = size_t(perm[j]);
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

} // namespace

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels,
                                 std::vector<int> generators) {
    const int n = int(table.size());
    if (n == 0) throw validation_error("group table is empty");
    if (n > kMaxOrder)
        throw validation_error("group order " + std::to_string(n) + " exceeds cap " +
                               std::to_string(kMaxOrder));
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->mul_.assign(size_t(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        if (int(table[a].size()) != n) throw validation_error("group table is not square");
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n) throw validation_error("group table entry out of range");
            g->mul_[size_t(a) * n + b] = v;
        }
    }
    for (int a = 0; a < n; ++a) {
        if (g->mul(0, a) != a || g->mul(a, 0) != a)
            throw validation_error("element 0 is not a two-sided identity");
    }
    // Latin square
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[g->mul(a, b)]) throw validation_error("group table row is not a permutation");
            row[g->mul(a, b)] = true;
            if (col[g->mul(b, a)]) throw validation_error("group table column is not a permutation");
            col[g->mul(b, a)] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = g->mul(a, b);
            for (int c = 0; c < n; ++c)
                if (g->mul(ab, c) != g->mul(a, g->mul(b, c)))
                    throw validation_error("group table is not associative");
        }
    g->inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g->mul(a, b) == 0 && g->mul(b, a) == 0) g->inv_[a] = b;
    for (int a = 0; a < n; ++a)
        if (g->inv_[a] < 0) throw validation_error("missing two-sided inverse");

    if (labels.empty()) {
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back(default_label(i));
    } else if (int(labels.size()) != n) {
        throw validation_error("label list length does not match group order");
    }
    g->labels_ = std::move(labels);
    g->generators_ = std::move(generators);
    return g;
}

GroupPtr FiniteGroup::from_permutations(const std::vector<Cycles>& gens) {
    int degree = 1;
    for (const auto& cycles : gens)
        for (const auto& cyc : cycles)
            for (int pt : cyc) {
                if (pt < 1) throw validation_error("permutation points are 1-based");
                degree = std::max(degree, pt);
            }
    if (degree > kMaxPermDegree)
        throw validation_error("permutation degree " + std::to_string(degree) + " exceeds cap " +
                               std::to_string(kMaxPermDegree));

    using Perm = std::vector<int>;
    auto perm_of_cycles = [&](const Cycles& cycles) {
        Perm p(degree);
        for (int i = 0; i < degree; ++i) p[i] = i;
        for (const auto& cyc : cycles) {
            std::set<int> pts(cyc.begin(), cyc.end());
            if (pts.size() != cyc.size()) throw validation_error("cycle repeats a point");
            Perm q = p;
            for (size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i] - 1;
                int to = cyc[(i + 1) % cyc.size()] - 1;
                q[from] = p[to]; // apply existing p after this cycle
            }
            p = q;
        }
        return p;
    };
    auto compose = [&](const Perm& a, const Perm& b) { // apply b first, then a
        Perm c(degree);
        for (int i = 0; i < degree; ++i) c[i] = a[b[i]];
        return c;
    };

    std::vector<Perm> gen_perms;
    for (const auto& c : gens) gen_perms.push_back(perm_of_cycles(c));

    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    std::vector<int> level{0};
    while (!level.empty()) {
        std::set<Perm> fresh;
        for (int e : level)
            for (const auto& gp : gen_perms) {
                Perm p = compose(elems[e], gp);
                if (!index.count(p)) fresh.insert(p);
            }
        level.clear();
        for (const auto& p : fresh) { // std::set iterates lexicographically
            index[p] = int(elems.size());
            level.push_back(int(elems.size()));
            elems.push_back(p);
            if (int(elems.size()) > kMaxOrder)
                throw validation_error("generated group order exceeds cap " +
                                       std::to_string(kMaxOrder));
        }
    }

    const int n = int(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elems) labels.push_back(cycle_label(p));
    std::vector<int> gen_idx;
    for (const auto& gp : gen_perms)
        if (index.at(gp) != 0) gen_idx.push_back(index.at(gp));
    std::sort(gen_idx.begin(), gen_idx.end());
    gen_idx.erase(std::unique(gen_idx.begin(), gen_idx.end()), gen_idx.end());
    return from_table(std::move(table), std::move(labels), std::move(gen_idx));
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::conjugacy_class(int a) const {
    std::set<int> cls;
    for (int g = 0; g < order_; ++g) cls.insert(conj(g, a));
    return std::vector<int>(cls.begin(), cls.end());
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
    return t;
}

GroupPtr make_group_from_table(std::vector<std::vector<int>> table,
                               std::vector<std::string> labels) {
    return FiniteGroup::from_table(std::move(table), std::move(labels));
}

GroupPtr make_group_from_permutations(const std::vector<Cycles>& gens) {
    return FiniteGroup::from_permutations(gens);
}

GroupPtr cyclic_group(int n) {
    if (n < 1) throw validation_error("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    std::vector<int> gens;
    if (n > 1) gens.push_back(1);
    return FiniteGroup::from_table(std::move(t), std::move(labels), std::move(gens));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    const int na = a->order(), nb = b->order(), n = na * nb;
    if (n > kMaxOrder) throw validation_error("direct product exceeds order cap");
    auto idx = [&](int x, int y) { return x * nb + y; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            labels[idx(x, y)] = "(" + a->labels()[x] + "," + b->labels()[y] + ")";
            for (int u = 0; u < na; ++u)
                for (int v = 0; v < nb; ++v)
                    t[idx(x, y)][idx(u, v)] = idx(a->mul(x, u), b->mul(y, v));
        }
    std::vector<int> gens;
    for (int g : a->generators()) gens.push_back(idx(g, 0));
    for (int g : b->generators()) gens.push_back(idx(0, g));
    return FiniteGroup::from_table(std::move(t), std::move(labels), std::move(gens));
}

GroupPtr metacyclic_group(int n, int m, int s, int t) {
    if (n < 1 || m < 1) throw validation_error("metacyclic parameters must be positive");
    auto powmod = [&](long long base, int e) {
        long long r = 1 % n;
        for (int i = 0; i < e; ++i) r = (r * base) % n;
        return int(r);
    };
    s = ((s % n) + n) % n;
    t = ((t % n) + n) % n;
    if (powmod(t, m) != 1 % n) throw validation_error("metacyclic: t^m != 1 mod n");
    if ((1LL * s * (t - 1)) % n != 0) throw validation_error("metacyclic: s(t-1) != 0 mod n");
    const int order = n * m;
    if (order > kMaxOrder) throw validation_error("metacyclic group exceeds order cap");
    auto idx = [&](int k, int e) { return e * n + k; };
    std::vector<std::vector<int>> tab(order, std::vector<int>(order));
    std::vector<std::string> labels(order);
    for (int e = 0; e < m; ++e)
        for (int k = 0; k < n; ++k) {
            std::ostringstream os;
            os << "a" << k << "b" << e;
            labels[idx(k, e)] = os.str();
            for (int e2 = 0; e2 < m; ++e2)
                for (int k2 = 0; k2 < n; ++k2) {
                    int kk = int((k + 1LL * powmod(t, e) * k2 + (e + e2 >= m ? s : 0)) % n);
                    int ee = (e + e2) % m;
                    tab[idx(k, e)][idx(k2, e2)] = idx(kk, ee);
                }
        }
    std::vector<int> gens;
    if (n > 1) gens.push_back(idx(1, 0));
    if (m > 1) gens.push_back(idx(0, 1));
    return FiniteGroup::from_table(std::move(tab), std::move(labels), std::move(gens));
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

Subgroup make_subgroup(const GroupPtr& g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members[0] != 0)
        throw validation_error("subgroup must contain the identity");
    Subgroup h{g, std::move(members)};
    for (int a : h.members) {
        if (a < 0 || a >= g->order()) throw validation_error("subgroup member out of range");
        if (!h.contains(g->inv(a))) throw validation_error("subgroup not closed under inverse");
        for (int b : h.members)
            if (!h.contains(g->mul(a, b)))
                throw validation_error("subgroup not closed under multiplication");
    }
    return h;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
    std::set<int> s{0};
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int gen : gens) {
            int y = g->mul(x, gen);
            if (s.insert(y).second) stack.push_back(y);
        }
    }
    // gens' inverses are reached automatically in a finite group
    return Subgroup{g, std::vector<int>(s.begin(), s.end())};
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order());
    for (int i = 0; i < g->order(); ++i) all[i] = i;
    return Subgroup{g, std::move(all)};
}

Subgroup cyclic_subgroup(const GroupPtr& g, int a) { return subgroup_generated(g, {a}); }

bool subgroup_is_cyclic(const Subgroup& h) {
    for (int a : h.members)
        if (h.ambient->element_order(a) == h.order()) return true;
    return false;
}

int cyclic_generator(const Subgroup& h) {
    for (int a : h.members)
        if (h.ambient->element_order(a) == h.order()) return a;
    throw validation_error("subgroup is not cyclic");
}

std::optional<std::pair<int, int>> normality_witness(const Subgroup& h) {
    const auto& g = h.ambient;
    for (int x : h.members)
        for (int a = 0; a < g->order(); ++a)
            if (!h.contains(g->conj(a, x))) return std::make_pair(x, a);
    return std::nullopt;
}

bool is_normal(const Subgroup& h) { return !normality_witness(h).has_value(); }

bool subgroup_is_abelian(const Subgroup& h) {
    for (int a : h.members)
        for (int b : h.members)
            if (h.ambient->mul(a, b) != h.ambient->mul(b, a)) return false;
    return true;
}

Subgroup center(const GroupPtr& g) {
    std::vector<int> z;
    for (int a = 0; a < g->order(); ++a) {
        bool central = true;
        for (int b = 0; b < g->order() && central; ++b)
            if (g->mul(a, b) != g->mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return make_subgroup(g, std::move(z));
}

GroupMap make_group_map(const GroupPtr& dom, const GroupPtr& cod, std::vector<int> image) {
    GroupMap f{dom, cod, std::move(image)};
    if (int(f.image.size()) != dom->order())
        throw validation_error("group map image length mismatch");
    if (!is_homomorphism(f)) throw validation_error("map is not a homomorphism");
    return f;
}

GroupMap identity_map(const GroupPtr& g) {
    std::vector<int> im(g->order());
    for (int i = 0; i < g->order(); ++i) im[i] = i;
    return GroupMap{g, g, std::move(im)};
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
    std::vector<int> im(inner.domain->order());
    for (int i = 0; i < inner.domain->order(); ++i) im[i] = outer.image[inner.image[i]];
    return GroupMap{inner.domain, outer.codomain, std::move(im)};
}

GroupMap inverse_automorphism(const GroupMap& psi) {
    std::vector<int> im(psi.domain->order(), -1);
    for (int i = 0; i < psi.domain->order(); ++i) {
        if (im[psi.image[i]] != -1) throw validation_error("map is not injective");
        im[psi.image[i]] = i;
    }
    return GroupMap{psi.codomain, psi.domain, std::move(im)};
}

GroupMap inner_automorphism(const GroupPtr& g, int by) {
    std::vector<int> im(g->order());
    for (int x = 0; x < g->order(); ++x) im[x] = g->mul(g->mul(by, x), g->inv(by));
    return GroupMap{g, g, std::move(im)};
}

bool is_homomorphism(const GroupMap& f) {
    if (f.image[0] != 0) return false;
    const int n = f.domain->order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (f.image[f.domain->mul(a, b)] != f.codomain->mul(f.image[a], f.image[b]))
                return false;
    return true;
}

QuotientData quotient(const GroupPtr& g, const Subgroup& h) {
    if (auto w = normality_witness(h)) {
        throw validation_error("subgroup is not normal: conjugating member " +
                               g->labels()[w->first] + " by " + g->labels()[w->second] +
                               " leaves the subgroup");
    }
    const int n = g->order();
    std::vector<int> coset_min(n, -1);
    for (int a = 0; a < n; ++a) {
        if (coset_min[a] != -1) continue;
        int mn = a;
        std::vector<int> coset;
        for (int x : h.members) coset.push_back(g->mul(a, x));
        for (int c : coset) mn = std::min(mn, c);
        for (int c : coset) coset_min[c] = mn;
    }
    std::vector<int> reps;
    for (int a = 0; a < n; ++a)
        if (coset_min[a] == a) reps.push_back(a);
    std::sort(reps.begin(), reps.end());
    const int np = int(reps.size());
    std::vector<int> rep_index(n, -1);
    for (int i = 0; i < np; ++i) rep_index[reps[i]] = i;
    std::vector<int> proj(n);
    for (int a = 0; a < n; ++a) proj[a] = rep_index[coset_min[a]];

    std::vector<std::vector<int>> tab(np, std::vector<int>(np));
    std::vector<std::string> labels(np);
    for (int i = 0; i < np; ++i) {
        labels[i] = g->labels()[reps[i]] + "H";
        for (int j = 0; j < np; ++j) tab[i][j] = proj[g->mul(reps[i], reps[j])];
    }
    GroupPtr p = FiniteGroup::from_table(std::move(tab), std::move(labels));
    GroupMap projection{g, p, std::move(proj)};
    return QuotientData{g, h, p, std::move(projection), std::move(reps)};
}

SubgroupAsGroup subgroup_as_group(const Subgroup& h) {
    const auto& g = h.ambient;
    const int k = h.order();
    std::vector<int> from(g->order(), -1);
    for (int i = 0; i < k; ++i) from[h.members[i]] = i;
    std::vector<std::vector<int>> tab(k, std::vector<int>(k));
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) {
        labels[i] = g->labels()[h.members[i]];
        for (int j = 0; j < k; ++j) tab[i][j] = from[g->mul(h.members[i], h.members[j])];
    }
    return SubgroupAsGroup{FiniteGroup::from_table(std::move(tab), std::move(labels)),
                           h.members, std::move(from)};
}

std::vector<int> generating_sequence(const GroupPtr& g) {
    std::vector<int> gens;
    Subgroup s = trivial_subgroup(g);
    while (s.order() < g->order()) {
        int next = -1;
        for (int a = 0; a < g->order(); ++a)
            if (!s.contains(a)) {
                next = a;
                break;
            }
        gens.push_back(next);
        s = subgroup_generated(g, gens);
    }
    return gens;
}

namespace {

struct HomSearch {
    const FiniteGroup* dom;
    const FiniteGroup* cod;
    std::vector<int> gens;
    std::vector<std::vector<int>> candidates; // per generator slot
    long long nodes = 0;
    AutBudget budget;
    std::vector<GroupMap> results;
    GroupPtr dom_ptr, cod_ptr;
    bool stop_at_first = false;

    // img on <gens[0..depth]> by BFS closure; false on inconsistency/collision
    bool close(int depth, std::vector<int>& img) const {
        img.assign(dom->order(), -1);
        std::vector<bool> hit(cod->order(), false);
        img[0] = 0;
        hit[0] = true;
        std::vector<int> list{0};
        for (size_t pos = 0; pos < list.size(); ++pos) {
            int e = list[pos];
            for (int j = 0; j <= depth; ++j) {
                int x = dom->mul(e, gens[j]);
                int y = cod->mul(img[e], candidate_img[j]);
                if (img[x] == -1) {
                    if (hit[y]) return false; // not injective
                    img[x] = y;
                    hit[y] = true;
                    list.push_back(x);
                } else if (img[x] != y) {
                    return false;
                }
            }
        }
        return true;
    }

    std::vector<int> candidate_img;

    void search(int depth) {
        if (!results.empty() && stop_at_first) return;
        if (depth == int(gens.size())) {
            std::vector<int> img;
            if (!close(depth - 1, img)) return;
            bool total = true;
            for (int v : img)
                if (v < 0) total = false;
            if (!total) return; // should not happen: gens generate
            results.push_back(GroupMap{dom_ptr, cod_ptr, img});
            if ((long long)results.size() > budget.max_results)
                throw budget_error("automorphism list exceeds result budget");
            return;
        }
        for (int cand : candidates[depth]) {
            if (++nodes > budget.max_candidates)
                throw budget_error("automorphism search exceeds candidate budget");
            candidate_img[depth] = cand;
            std::vector<int> img;
            if (!close(depth, img)) continue;
            search(depth + 1);
            if (!results.empty() && stop_at_first) return;
        }
    }
};

std::vector<GroupMap> hom_search(const GroupPtr& a, const GroupPtr& b, bool first_only,
                                 const AutBudget& budget) {
    HomSearch hs;
    hs.dom = a.get();
    hs.cod = b.get();
    hs.dom_ptr = a;
    hs.cod_ptr = b;
    hs.budget = budget;
    hs.stop_at_first = first_only;
    hs.gens = generating_sequence(a);
    if (hs.gens.empty()) {
        hs.results.push_back(GroupMap{a, b, std::vector<int>{0}});
        return hs.results;
    }
    hs.candidate_img.assign(hs.gens.size(), 0);
    for (int gidx : hs.gens) {
        int ord = a->element_order(gidx);
        std::vector<int> cands;
        for (int x = 0; x < b->order(); ++x)
            if (b->element_order(x) == ord) cands.push_back(x);
        hs.candidates.push_back(std::move(cands));
    }
    hs.search(0);
    std::sort(hs.results.begin(), hs.results.end(),
              [](const GroupMap& x, const GroupMap& y) { return x.image < y.image; });
    return hs.results;
}

} // namespace

std::vector<GroupMap> automorphisms(const GroupPtr& g, const AutBudget& budget) {
    if (g->order() > kAutOrderCap)
        throw budget_error("automorphism search limited to groups of order <= " +
                           std::to_string(kAutOrderCap));
    return hom_search(g, g, false, budget);
}

std::optional<GroupMap> find_isomorphism(const GroupPtr& a, const GroupPtr& b,
                                         const AutBudget& budget) {
    if (a->order() != b->order()) return std::nullopt;
    auto res = hom_search(a, b, true, budget);
    if (res.empty()) return std::nullopt;
    return res.front();
}

RelativeAutData aut_relative(const GroupPtr& g, const Subgroup& h, const AutBudget& budget) {
    RelativeAutData out;
    out.quot = quotient(g, h);
    out.aut_g = automorphisms(g, budget);
    auto hg = subgroup_as_group(h);
    out.aut_h = automorphisms(hg.group, budget);
    out.aut_p = automorphisms(out.quot.quotient, budget);

    auto find_in = [](const std::vector<GroupMap>& list, const std::vector<int>& image) {
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i].image == image) return int(i);
        return -1;
    };

    const auto& proj = out.quot.projection;
    for (const auto& psi : out.aut_g) {
        bool stable = true;
        for (int x : h.members)
            if (!h.contains(psi(x))) {
                stable = false;
                break;
            }
        if (!stable) continue;
        out.aut_g_h.push_back(psi);
        // induced map on P: pH -> psi(p)H
        std::vector<int> pim(out.quot.quotient->order());
        for (int i = 0; i < out.quot.quotient->order(); ++i)
            pim[i] = proj(psi(out.quot.section[i]));
        int pidx = find_in(out.aut_p, pim);
        if (pidx < 0) throw consistency_error("induced quotient map is not an automorphism");
        out.induced_on_quotient.push_back(pidx);
        bool identity_on_p = true;
        for (size_t i = 0; i < pim.size(); ++i)
            if (pim[i] != int(i)) identity_on_p = false;
        if (identity_on_p) {
            out.aut_rel.push_back(psi);
            std::vector<int> him(hg.group->order());
            for (int i = 0; i < hg.group->order(); ++i)
                him[i] = hg.from_ambient[psi(hg.to_ambient[i])];
            int hidx = find_in(out.aut_h, him);
            if (hidx < 0) throw consistency_error("restriction to kernel is not an automorphism");
            out.restriction_to_h.push_back(hidx);
        }
    }

    // exactness at the kernel: Aut_{G/H}(G;H) == ker(Aut(G;H) -> Aut(G/H))
    out.kernel_is_aut_rel = true;
    std::vector<int> id_p(out.quot.quotient->order());
    for (int i = 0; i < out.quot.quotient->order(); ++i) id_p[i] = i;
    int id_p_idx = find_in(out.aut_p, id_p);
    size_t kernel_count = 0;
    for (size_t i = 0; i < out.aut_g_h.size(); ++i)
        if (out.induced_on_quotient[i] == id_p_idx) ++kernel_count;
    if (kernel_count != out.aut_rel.size()) out.kernel_is_aut_rel = false;
    return out;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> triv{0};
    seen.insert(triv);
    queue.push_back(triv);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> cur = queue[qi];
        for (int a = 0; a < g->order(); ++a) {
            if (std::binary_search(cur.begin(), cur.end(), a)) continue;
            std::vector<int> gens = cur;
            gens.push_back(a);
            Subgroup s = subgroup_generated(g, gens);
            if (seen.insert(s.members).second) queue.push_back(s.members);
        }
    }
    std::vector<Subgroup> out;
    for (const auto& m : seen) out.push_back(Subgroup{g, m});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members < b.members;
    });
    return out;
}

} // namespace hurwitz
