// Irreducibility and orthogonal-subspace dissection of orthogonal product sets.
//
// A set is reducible from one party when that party's local vectors split into
// blocks that are pairwise orthogonal across blocks. The blocks are the
// connected components of the party's nonorthogonality graph.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nle/gates.hpp"
#include "nle/numkit.hpp"
#include "nle/qstate.hpp"

namespace nle {

struct ProductMember {
    double probability = 0.0;
    Vector a;
    Vector b;

    const Vector& part(Party p) const noexcept { return p == Party::A ? a : b; }
};

/// Mutually orthogonal product states kept in factored form.
class ProductSet {
public:
    ProductSet(Dims dims, std::vector<ProductMember> members) : dims_(dims), members_(std::move(members)) {
        if (members_.empty()) throw Error("empty-ensemble", "a product set needs at least one member");
        double total = 0.0;
        for (const ProductMember& m : members_) {
            if (m.a.size() != dims_.a || m.b.size() != dims_.b) throw Error("bad-dims", "local part size differs from dims");
            if (std::abs(norm2(m.a) - 1.0) > kTol.state_norm || std::abs(norm2(m.b) - 1.0) > kTol.state_norm) {
                throw Error("not-normalized", "local parts must be normalized");
            }
            if (!(m.probability > 0.0)) throw Error("bad-probabilities", "probabilities must be positive");
            total += m.probability;
        }
        if (std::abs(total - 1.0) > kTol.probability_sum) throw Error("bad-probabilities", "probabilities do not sum to 1");
        for (std::size_t i = 0; i < members_.size(); ++i) {
            for (std::size_t j = i + 1; j < members_.size(); ++j) {
                const double ov = std::abs(inner(members_[i].a, members_[j].a) * inner(members_[i].b, members_[j].b));
                if (ov > kTol.orthogonality) {
                    throw Error("not-orthogonal", "members " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
                }
            }
        }
    }

    /// Factors every member by its leading Schmidt pair.
    static ProductSet from_ensemble(const Ensemble& e) {
        std::vector<ProductMember> members;
        for (const Member& m : e.members()) {
            if (!is_product(m.state)) throw Error("not-product-ensemble", "member is entangled");
            Schmidt sd = schmidt(m.state);
            members.push_back(ProductMember{m.probability, normalized(std::move(sd.left.front())),
                                            normalized(std::move(sd.right.front()))});
        }
        return ProductSet(e.dims(), std::move(members));
    }

    Dims dims() const noexcept { return dims_; }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<ProductMember>& members() const noexcept { return members_; }
    const ProductMember& operator[](std::size_t i) const { return members_.at(i); }

    PureState joint(std::size_t i) const { return PureState::product(members_.at(i).a, members_.at(i).b); }

    Ensemble to_ensemble() const {
        std::vector<Member> out;
        for (std::size_t i = 0; i < members_.size(); ++i) out.push_back(Member{members_[i].probability, joint(i)});
        return Ensemble(dims_, std::move(out));
    }

private:
    Dims dims_;
    std::vector<ProductMember> members_;
};

using Block = std::vector<std::size_t>;
using Partition = std::vector<Block>;

/// Components of `side`'s nonorthogonality graph restricted to `indices`, in first-seen order.
inline Partition side_components(const ProductSet& set, const Block& indices, Party side) {
    const std::size_t k = indices.size();
    std::vector<std::size_t> label(k, k);
    Partition out;
    for (std::size_t s = 0; s < k; ++s) {
        if (label[s] != k) continue;
        const std::size_t id = out.size();
        out.emplace_back();
        std::vector<std::size_t> stack{s};
        label[s] = id;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            out[id].push_back(indices[u]);
            for (std::size_t v = 0; v < k; ++v) {
                if (label[v] != k) continue;
                const cplx ov = inner(set[indices[u]].part(side), set[indices[v]].part(side));
                if (std::abs(ov) > kTol.orthogonality) {
                    label[v] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

inline Block all_indices(const ProductSet& set) {
    Block b(set.size());
    std::iota(b.begin(), b.end(), std::size_t{0});
    return b;
}

/// Block partition when `side` can split the set by an orthogonal-subspace measurement.
inline std::optional<Partition> reducible_from(const ProductSet& set, Party side) {
    if (set.size() < 2) throw Error("trivial-set", "reducibility needs at least two members");
    Partition p = side_components(set, all_indices(set), side);
    if (p.size() < 2) return std::nullopt;
    return p;
}

enum class LeafStatus {
    internal,    // split further
    singleton,
    irreducible, // no split from either side
    blocked,     // the acting party cannot split and the other cannot finish in one round
};

struct DissectionTree {
    Block members;
    std::optional<Party> split_by;  // set on internal nodes
    std::optional<Party> blocked_side;  // set on blocked leaves
    LeafStatus status = LeafStatus::singleton;
    std::vector<DissectionTree> children;

    bool is_leaf() const noexcept { return status != LeafStatus::internal; }
};

namespace detail {

inline DissectionTree leaf(Block members, LeafStatus st, std::optional<Party> blocked = std::nullopt) {
    DissectionTree t;
    t.members = std::move(members);
    t.status = st;
    t.blocked_side = blocked;
    return t;
}

inline DissectionTree dissect_free(const ProductSet& set, const Block& node) {
    if (node.size() == 1) return leaf(node, LeafStatus::singleton);
    for (Party side : {Party::A, Party::B}) {
        Partition p = side_components(set, node, side);
        if (p.size() < 2) continue;
        DissectionTree t;
        t.members = node;
        t.status = LeafStatus::internal;
        t.split_by = side;
        for (const Block& b : p) t.children.push_back(dissect_free(set, b));
        return t;
    }
    return leaf(node, LeafStatus::irreducible);
}

inline bool irreducible_both(const ProductSet& set, const Block& node) {
    return side_components(set, node, Party::A).size() < 2 && side_components(set, node, Party::B).size() < 2;
}

// One round: `first` measures once, then the other party must finish each block with one measurement.
inline DissectionTree dissect_one_round(const ProductSet& set, const Block& node, Party first) {
    if (node.size() == 1) return leaf(node, LeafStatus::singleton);
    const Partition p = side_components(set, node, first);
    if (p.size() < 2) {
        return irreducible_both(set, node) ? leaf(node, LeafStatus::irreducible) : leaf(node, LeafStatus::blocked, first);
    }
    DissectionTree root;
    root.members = node;
    root.status = LeafStatus::internal;
    root.split_by = first;
    const Party second = other(first);
    for (const Block& b : p) {
        if (b.size() == 1) {
            root.children.push_back(leaf(b, LeafStatus::singleton));
            continue;
        }
        const Partition q = side_components(set, b, second);
        const bool finishes = std::all_of(q.begin(), q.end(), [](const Block& x) { return x.size() == 1; });
        if (!finishes) {
            root.children.push_back(irreducible_both(set, b) ? leaf(b, LeafStatus::irreducible)
                                                            : leaf(b, LeafStatus::blocked, first));
            continue;
        }
        DissectionTree child;
        child.members = b;
        child.status = LeafStatus::internal;
        child.split_by = second;
        for (const Block& x : q) child.children.push_back(leaf(x, LeafStatus::singleton));
        root.children.push_back(std::move(child));
    }
    return root;
}

}  // namespace detail

/// Without `first`, either party may split at every node and rounds are unbounded.
/// With `first`, the tree is the one-round protocol that `first` opens.
inline DissectionTree dissect(const ProductSet& set, std::optional<Party> first = std::nullopt) {
    const Block root = all_indices(set);
    return first ? detail::dissect_one_round(set, root, *first) : detail::dissect_free(set, root);
}

template <class F>
void for_each_leaf(const DissectionTree& t, F&& f) {
    if (t.is_leaf()) {
        f(t);
        return;
    }
    for (const DissectionTree& c : t.children) for_each_leaf(c, f);
}

inline bool fully_dissected(const DissectionTree& t) {
    bool ok = true;
    for_each_leaf(t, [&](const DissectionTree& l) { ok = ok && l.status == LeafStatus::singleton; });
    return ok;
}

/// Largest number of changes of acting party along a root-to-leaf path.
inline std::size_t alternations(const DissectionTree& t) {
    std::size_t best = 0;
    auto walk = [&](auto&& self, const DissectionTree& n, std::optional<Party> prev, std::size_t count) -> void {
        if (n.is_leaf()) {
            best = std::max(best, count);
            return;
        }
        const std::size_t next = (prev && *prev != *n.split_by) ? count + 1 : count;
        for (const DissectionTree& c : n.children) self(self, c, n.split_by, next);
    };
    walk(walk, t, std::nullopt, 0);
    return best;
}

enum class Dissectibility { either_side, one_side, multiround, non_dissectible };

struct Classification {
    Dissectibility kind = Dissectibility::non_dissectible;
    std::optional<Party> party;  // starting party for one_side

    std::string label() const {
        switch (kind) {
            case Dissectibility::either_side: return "dissectible-either-side";
            case Dissectibility::one_side: return std::string("dissectible-one-side(") + party_name(*party) + ")";
            case Dissectibility::multiround: return "dissectible-multiround";
            case Dissectibility::non_dissectible: return "non-dissectible";
        }
        return "";
    }
    friend bool operator==(const Classification&, const Classification&) = default;
};

inline Classification classify(const ProductSet& set) {
    const bool from_a = fully_dissected(dissect(set, Party::A));
    const bool from_b = fully_dissected(dissect(set, Party::B));
    if (from_a && from_b) return {Dissectibility::either_side, std::nullopt};
    if (from_a) return {Dissectibility::one_side, Party::A};
    if (from_b) return {Dissectibility::one_side, Party::B};
    if (fully_dissected(dissect(set))) return {Dissectibility::multiround, std::nullopt};
    return {Dissectibility::non_dissectible, std::nullopt};
}

/// sum_i p_i E(CNOT^r psi_i) over `members`, maximized over r in 1..d_target-1.
inline double best_cnot_mass(const ProductSet& set, const Block& members, Party control) {
    const Dims d = set.dims();
    const std::size_t target_dim = d.of(other(control));
    const std::size_t max_rep = std::max<std::size_t>(1, target_dim - 1);
    double best = 0.0;
    for (std::size_t r = 1; r <= max_rep; ++r) {
        double acc = 0.0;
        for (std::size_t i : members) {
            const PureState s = set.joint(i);
            acc += set[i].probability * entanglement_entropy(PureState(d, apply_cnot(s.amplitudes(), d, control, r)));
        }
        best = std::max(best, acc);
    }
    return best;
}

/// Each non-singleton leaf contributes its probability mass times the mean CNOT
/// entanglement of its members (best direction); singleton leaves contribute 0.
inline double weighted_nonlocal_entropy(const ProductSet& set, std::optional<Party> first = std::nullopt) {
    double total = 0.0;
    for_each_leaf(dissect(set, first), [&](const DissectionTree& l) {
        if (l.members.size() < 2) return;
        total += std::max(best_cnot_mass(set, l.members, Party::A), best_cnot_mass(set, l.members, Party::B));
    });
    return total;
}

inline std::string status_label(const DissectionTree& t) {
    switch (t.status) {
        case LeafStatus::internal: return "split";
        case LeafStatus::singleton: return "leaf: singleton";
        case LeafStatus::irreducible: return "leaf: irreducible from both sides";
        case LeafStatus::blocked: return std::string("leaf: irreducible from ") + party_name(*t.blocked_side);
    }
    return "";
}

/// Indented text rendering, one node per line; member indices are 1-based.
inline std::string render(const DissectionTree& t) {
    std::ostringstream os;
    auto walk = [&](auto&& self, const DissectionTree& n, std::size_t depth) -> void {
        os << std::string(2 * depth, ' ') << '{';
        for (std::size_t i = 0; i < n.members.size(); ++i) os << (i ? "," : "") << n.members[i] + 1;
        os << "} ";
        if (n.is_leaf()) {
            os << status_label(n) << '\n';
            return;
        }
        os << "split by " << party_name(*n.split_by) << " into " << n.children.size() << " blocks\n";
        for (const DissectionTree& c : n.children) self(self, c, depth + 1);
    };
    walk(walk, t, 0);
    return os.str();
}

}  // namespace nle
