#include "cyclo/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace cyclo {

int Partition::size() const {
    int s = 0;
    for (int r : rows) s += r;
    return s;
}

int Partition::column_length(int c) const {
    int k = 0;
    for (int r : rows)
        if (r >= c) ++k;
    return k;
}

bool Partition::contains(int r, int c) const {
    return r >= 1 && c >= 1 && r <= length() && c <= rows[static_cast<std::size_t>(r - 1)];
}

bool Partition::is_valid() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0) return false;
        if (i > 0 && rows[i] > rows[i - 1]) return false;
    }
    return true;
}

MPartition MPartition::empty(int m) { return MPartition(std::vector<Partition>(static_cast<std::size_t>(m))); }

int MPartition::size() const {
    int s = 0;
    for (const auto& p : components) s += p.size();
    return s;
}

bool MPartition::contains(const MNode& x) const {
    if (x.pos < 1 || x.pos > m()) return false;
    return components[static_cast<std::size_t>(x.pos - 1)].contains(x.row, x.col);
}

bool MPartition::is_valid() const {
    return std::all_of(components.begin(), components.end(), [](const Partition& p) { return p.is_valid(); });
}

MPartition MPartition::with_node(const MNode& x) const {
    MPartition r = *this;
    auto& rows = r.components.at(static_cast<std::size_t>(x.pos - 1)).rows;
    if (x.row == static_cast<int>(rows.size()) + 1)
        rows.push_back(1);
    else
        rows.at(static_cast<std::size_t>(x.row - 1)) += 1;
    return r;
}

MPartition MPartition::without_node(const MNode& x) const {
    MPartition r = *this;
    auto& rows = r.components.at(static_cast<std::size_t>(x.pos - 1)).rows;
    rows.at(static_cast<std::size_t>(x.row - 1)) -= 1;
    if (rows.back() == 0) rows.pop_back();
    return r;
}

std::vector<MNode> MPartition::nodes() const {
    std::vector<MNode> out;
    for (int p = 1; p <= m(); ++p) {
        const auto& rows = components[static_cast<std::size_t>(p - 1)].rows;
        for (int r = 1; r <= static_cast<int>(rows.size()); ++r)
            for (int c = 1; c <= rows[static_cast<std::size_t>(r - 1)]; ++c) out.push_back({r, c, p});
    }
    return out;
}

std::string MPartition::to_string() const {
    std::string s = "[";
    for (std::size_t p = 0; p < components.size(); ++p) {
        if (p) s += ",";
        s += "[";
        for (std::size_t i = 0; i < components[p].rows.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(components[p].rows[i]);
        }
        s += "]";
    }
    return s + "]";
}

namespace {

// Nested integer lists such as [[1,2],[3]].
struct ListNode {
    bool is_int = false;
    long value = 0;
    std::size_t pos = 0;
    std::vector<ListNode> items;
};

class ListParser {
public:
    explicit ListParser(std::string_view s) : s_(s) {}

    ListNode parse() {
        ListNode n = item();
        skip();
        if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
        return n;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    ListNode item() {
        skip();
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        ListNode n;
        n.pos = i_;
        if (s_[i_] == '[') {
            ++i_;
            skip();
            if (i_ < s_.size() && s_[i_] == ']') {
                ++i_;
                return n;
            }
            for (;;) {
                n.items.push_back(item());
                skip();
                if (i_ >= s_.size()) throw ParseError("expected ',' or ']'", i_);
                if (s_[i_] == ',') {
                    ++i_;
                    continue;
                }
                if (s_[i_] == ']') {
                    ++i_;
                    return n;
                }
                throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
            }
        }
        if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            n.is_int = true;
            n.value = std::stol(std::string(s_.substr(st, i_ - st)));
            return n;
        }
        throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

Partition partition_from(const ListNode& n) {
    if (n.is_int) throw ParseError("expected a list of row lengths", n.pos);
    Partition p;
    for (const auto& x : n.items) {
        if (!x.is_int) throw ParseError("expected a row length", x.pos);
        if (x.value <= 0) throw ParseError("row lengths must be positive", x.pos);
        p.rows.push_back(static_cast<int>(x.value));
    }
    for (std::size_t i = 1; i < p.rows.size(); ++i)
        if (p.rows[i] > p.rows[i - 1]) throw ParseError("row lengths must be weakly decreasing", n.items[i].pos);
    return p;
}

}  // namespace

MPartition parse_mpartition(std::string_view text) {
    ListNode root = ListParser(text).parse();
    if (root.is_int) throw ParseError("expected '['", root.pos);
    MPartition lam;
    for (const auto& c : root.items) lam.components.push_back(partition_from(c));
    if (lam.components.empty()) throw ParseError("an m-partition needs at least one component", root.pos);
    return lam;
}

MPartition parse_shape(std::string_view text, int m) {
    ListNode root = ListParser(text).parse();
    if (root.is_int) throw ParseError("expected '['", root.pos);
    MPartition lam;
    bool flat = !root.items.empty() && root.items[0].is_int;
    if (flat) {
        lam.components.push_back(partition_from(root));
    } else {
        for (const auto& c : root.items) lam.components.push_back(partition_from(c));
    }
    if (lam.m() != m)
        throw ParseError("shape has " + std::to_string(lam.m()) + " components, expected " + std::to_string(m), 0);
    return lam;
}

std::string ContentString::to_string(int m) const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ", ";
        s += content_value(entries[i], m).to_string();
    }
    return s + ")";
}

bool is_standard(const MPartition& shape, const std::vector<MNode>& nodes) {
    if (static_cast<int>(nodes.size()) != shape.size()) return false;
    std::map<std::tuple<int, int, int>, int> at;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const MNode& x = nodes[i];
        if (!shape.contains(x)) return false;
        if (!at.emplace(std::make_tuple(x.pos, x.row, x.col), static_cast<int>(i + 1)).second) return false;
    }
    for (const auto& [key, e] : at) {
        auto [p, r, c] = key;
        auto left = at.find({p, r, c - 1});
        if (c > 1 && (left == at.end() || left->second > e)) return false;
        auto up = at.find({p, r - 1, c});
        if (r > 1 && (up == at.end() || up->second > e)) return false;
    }
    return true;
}

StandardMTableau::StandardMTableau(MPartition shape, std::vector<MNode> nodes)
    : shape_(std::move(shape)), nodes_(std::move(nodes)) {
    if (!is_standard(shape_, nodes_)) throw PreconditionError("filling is not a standard m-tableau");
}

int StandardMTableau::entry_at(const MNode& x) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i] == x) return static_cast<int>(i + 1);
    return 0;
}

StandardMTableau StandardMTableau::restricted() const {
    if (nodes_.empty()) throw PreconditionError("cannot restrict an empty tableau");
    StandardMTableau t;
    t.shape_ = shape_.without_node(nodes_.back());
    t.nodes_.assign(nodes_.begin(), nodes_.end() - 1);
    return t;
}

std::string StandardMTableau::to_string() const {
    std::string s = "[";
    for (int p = 1; p <= m(); ++p) {
        if (p > 1) s += ",";
        s += "[";
        const auto& rows = shape_.components[static_cast<std::size_t>(p - 1)].rows;
        for (int r = 1; r <= static_cast<int>(rows.size()); ++r) {
            if (r > 1) s += ",";
            s += "[";
            for (int c = 1; c <= rows[static_cast<std::size_t>(r - 1)]; ++c) {
                if (c > 1) s += ",";
                s += std::to_string(entry_at({r, c, p}));
            }
            s += "]";
        }
        s += "]";
    }
    return s + "]";
}

StandardMTableau parse_tableau(std::string_view text) {
    ListNode root = ListParser(text).parse();
    if (root.is_int) throw ParseError("expected '['", root.pos);
    MPartition shape;
    std::map<long, MNode> where;
    for (std::size_t p = 0; p < root.items.size(); ++p) {
        const auto& comp = root.items[p];
        if (comp.is_int) throw ParseError("expected a component", comp.pos);
        Partition part;
        for (std::size_t r = 0; r < comp.items.size(); ++r) {
            const auto& row = comp.items[r];
            if (row.is_int || row.items.empty()) throw ParseError("expected a non-empty row", row.pos);
            part.rows.push_back(static_cast<int>(row.items.size()));
            for (std::size_t c = 0; c < row.items.size(); ++c) {
                const auto& e = row.items[c];
                if (!e.is_int) throw ParseError("expected an entry", e.pos);
                if (!where.emplace(e.value, MNode{static_cast<int>(r + 1), static_cast<int>(c + 1), static_cast<int>(p + 1)})
                         .second)
                    throw ParseError("repeated entry", e.pos);
            }
        }
        if (!part.is_valid()) throw ParseError("rows must be weakly decreasing", comp.pos);
        shape.components.push_back(part);
    }
    std::vector<MNode> nodes;
    long expect = 1;
    for (const auto& [e, x] : where) {
        if (e != expect) throw ParseError("entries must be 1..n", root.pos);
        nodes.push_back(x);
        ++expect;
    }
    if (!is_standard(shape, nodes)) throw ParseError("filling is not standard", root.pos);
    return StandardMTableau(shape, nodes);
}

std::strong_ordering tableau_order(const StandardMTableau& a, const StandardMTableau& b) {
    const auto& x = a.nodes();
    const auto& y = b.nodes();
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
        if (auto c = node_order(x[i], y[i]); c != 0) return c;
    return x.size() <=> y.size();
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<MPartition> enumerate_mpartitions(int m, int n) {
    if (m < 1 || n < 0) throw PreconditionError("enumerate_mpartitions needs m >= 1 and n >= 0");
    std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) by_size[static_cast<std::size_t>(k)] = enumerate_partitions(k);
    std::vector<MPartition> out;
    std::vector<Partition> cur;
    std::function<void(int, int)> rec = [&](int comp, int left) {
        if (comp == m - 1) {
            for (const auto& p : by_size[static_cast<std::size_t>(left)]) {
                cur.push_back(p);
                out.emplace_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int k = left; k >= 0; --k)
            for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
                cur.push_back(p);
                rec(comp + 1, left - k);
                cur.pop_back();
            }
    };
    rec(0, n);
    std::sort(out.begin(), out.end(),
              [](const MPartition& a, const MPartition& b) { return a.components > b.components; });
    return out;
}

std::vector<MNode> boundary_nodes(const MPartition& lambda, BoundaryKind kind) {
    std::vector<MNode> out;
    for (int p = 1; p <= lambda.m(); ++p) {
        const auto& rows = lambda.components[static_cast<std::size_t>(p - 1)].rows;
        const int len = static_cast<int>(rows.size());
        if (kind == BoundaryKind::Removable) {
            for (int r = 1; r <= len; ++r) {
                int c = rows[static_cast<std::size_t>(r - 1)];
                if (r == len || rows[static_cast<std::size_t>(r)] < c) out.push_back({r, c, p});
            }
        } else {
            for (int r = 1; r <= len + 1; ++r) {
                int c = (r <= len ? rows[static_cast<std::size_t>(r - 1)] : 0) + 1;
                if (r == 1 || rows[static_cast<std::size_t>(r - 2)] >= c) out.push_back({r, c, p});
            }
        }
    }
    return out;
}

ContentEntry content_entry(const MNode& x) { return {x.pos, x.col - x.row}; }

RatFn content_value(const ContentEntry& c, int m) {
    Exponent e;
    e.e[0] = 2 * c.z;
    e.e[c.k] = 1;
    return RatFn::monomial(m, e);
}

RatFn content(const MNode& x, int m) {
    if (x.pos < 1 || x.pos > m) throw PreconditionError("node position outside 1..m");
    return content_value(content_entry(x), m);
}

std::vector<StandardMTableau> enumerate_standard_tableaux(const MPartition& lambda) {
    const int n = lambda.size();
    std::vector<StandardMTableau> out;
    std::vector<MNode> nodes;
    MPartition cur = MPartition::empty(lambda.m());
    std::function<void()> rec = [&] {
        if (static_cast<int>(nodes.size()) == n) {
            out.emplace_back(lambda, nodes);
            return;
        }
        for (const MNode& a : boundary_nodes(cur, BoundaryKind::Addable)) {
            if (!lambda.contains(a)) continue;
            MPartition saved = cur;
            cur = cur.with_node(a);
            nodes.push_back(a);
            rec();
            nodes.pop_back();
            cur = saved;
        }
    };
    rec();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return tableau_order(a, b) < 0; });
    return out;
}

ContentString content_string(const StandardMTableau& t) {
    ContentString s;
    for (const auto& x : t.nodes()) s.entries.push_back(content_entry(x));
    return s;
}

std::string ContentStringReport::describe() const {
    switch (condition) {
        case Condition::None:
            return "valid content string";
        case Condition::StartsAtParameter:
            return "entry " + std::to_string(index) + ": the first entry must be one of v1..vm";
        case Condition::HasNeighbour:
            return "entry " + std::to_string(index) + ": no earlier entry differs from it by a factor q^2 or q^-2";
        case Condition::RepeatSeparated:
            return "entry " + std::to_string(index) +
                   ": repeated value without both q^2-neighbours strictly between the repeats";
        case Condition::OutOfRange:
            return "entry " + std::to_string(index) + ": parameter index outside 1..m";
    }
    return "";
}

ContentStringReport is_content_string(const ContentString& s, int m) {
    using C = ContentStringReport::Condition;
    const auto& a = s.entries;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const int idx = static_cast<int>(j + 1);
        if (a[j].k < 1 || a[j].k > m) return {false, C::OutOfRange, idx};
        if (j == 0) {
            if (a[0].z != 0) return {false, C::StartsAtParameter, idx};
            continue;
        }
        if (a[j].z != 0) {
            bool found = false;
            for (std::size_t i = 0; i < j && !found; ++i)
                found = a[i].k == a[j].k && (a[i].z == a[j].z - 1 || a[i].z == a[j].z + 1);
            if (!found) return {false, C::HasNeighbour, idx};
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (!(a[i] == a[j])) continue;
            bool below = false, above = false;
            for (std::size_t t = i + 1; t < j; ++t) {
                if (a[t].k != a[j].k) continue;
                below = below || a[t].z == a[j].z - 1;
                above = above || a[t].z == a[j].z + 1;
            }
            if (!(below && above)) return {false, C::RepeatSeparated, idx};
        }
    }
    return {};
}

StandardMTableau string_to_tableau(const ContentString& s, int m) {
    auto rep = is_content_string(s, m);
    if (!rep.ok) throw ContentStringError(rep.describe());
    std::set<std::tuple<int, int, int>> used;
    std::vector<MNode> nodes;
    MPartition shape = MPartition::empty(m);
    for (const auto& e : s.entries) {
        int r = std::max(1, 1 - e.z);
        while (used.count({e.k, r, r + e.z})) ++r;
        MNode x{r, r + e.z, e.k};
        used.insert({e.k, r, r + e.z});
        nodes.push_back(x);
        auto& rows = shape.components[static_cast<std::size_t>(e.k - 1)].rows;
        if (static_cast<int>(rows.size()) < r) rows.resize(static_cast<std::size_t>(r), 0);
        rows[static_cast<std::size_t>(r - 1)] += 1;
    }
    if (!shape.is_valid() || !is_standard(shape, nodes))
        throw ContentStringError("placement did not produce a standard m-tableau");
    return StandardMTableau(shape, nodes);
}

std::optional<StandardMTableau> apply_adjacent_transposition(const StandardMTableau& t, int i) {
    if (i < 1 || i >= t.size()) throw PreconditionError("transposition index outside 1..n-1");
    std::vector<MNode> nodes = t.nodes();
    std::swap(nodes[static_cast<std::size_t>(i - 1)], nodes[static_cast<std::size_t>(i)]);
    if (!is_standard(t.shape(), nodes)) return std::nullopt;
    return StandardMTableau(t.shape(), nodes);
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt dim_mpartition(const MPartition& lambda) {
    BigInt hooks = 1;
    for (const auto& p : lambda.components)
        for (int r = 1; r <= p.length(); ++r)
            for (int c = 1; c <= p.rows[static_cast<std::size_t>(r - 1)]; ++c)
                hooks *= (p.rows[static_cast<std::size_t>(r - 1)] - c) + (p.column_length(c) - r) + 1;
    BigInt d = factorial(lambda.size()) / hooks;
    return d;
}

}  // namespace cyclo
