#pragma once

#include "hlpoly/permutation.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hlpoly {

struct InvalidLength : std::invalid_argument {
    InvalidLength() : std::invalid_argument("column length out of range [1, n]") {}
};

struct LengthMismatch : std::invalid_argument {
    LengthMismatch() : std::invalid_argument("columns have different lengths") {}
};

struct NotContained : std::invalid_argument {
    NotContained() : std::invalid_argument("partition is not contained in the other") {}
};

/// Thrown when a filling's column lengths do not weakly decrease left-to-right.
struct ColumnOrder : std::invalid_argument {
    ColumnOrder() : std::invalid_argument("column lengths must weakly decrease left-to-right") {}
};

/// Weakly decreasing nonnegative parts; trailing zeros are trimmed, the
/// ambient rank n is supplied where weight vectors are needed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition: parts must weakly decrease");
        if (!parts_.empty() && parts_.back() < 0)
            throw std::invalid_argument("partition: parts must be nonnegative");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    static Partition from_weight(const IntVector& v) {
        return Partition(std::vector<int>(v.begin(), v.end()));
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int num_rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i >= 1 && i <= num_rows() ? parts_[i - 1] : 0; }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    /// Lengths of the diagram's columns, weakly decreasing (the conjugate).
    std::vector<int> column_lengths() const {
        std::vector<int> out;
        for (int c = 1; c <= part(1); ++c) {
            int len = 0;
            while (len < num_rows() && parts_[len] >= c) ++len;
            out.push_back(len);
        }
        return out;
    }

    /// Column lengths from the rightmost column leftward, weakly increasing.
    std::vector<int> column_lengths_ascending() const {
        std::vector<int> out = column_lengths();
        std::reverse(out.begin(), out.end());
        return out;
    }

    IntVector to_weight(int n) const {
        if (num_rows() > n) throw std::invalid_argument("partition has more than n rows");
        IntVector v(n, 0);
        std::copy(parts_.begin(), parts_.end(), v.begin());
        return v;
    }

    bool contains(const Partition& mu) const {
        for (int i = 1; i <= mu.num_rows(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    /// Multiplicity of the part j (j >= 1).
    int multiplicity(int j) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ")";
        return os.str();
    }

private:
    std::vector<int> parts_;
};

/// Interlacing test for the skew diagram lambda - mu; throws NotContained
/// when mu is not inside lambda.
inline bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) throw NotContained{};
    for (int i = 1; i <= lambda.num_rows(); ++i)
        if (mu.part(i) < lambda.part(i + 1)) return false;
    return true;
}

/// A strictly increasing sequence from [n]; the weight of the corresponding
/// wedge of standard basis vectors.
class Column {
public:
    Column() = default;
    explicit Column(std::vector<int> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < 1 || (i > 0 && entries_[i] <= entries_[i - 1]))
                throw std::invalid_argument("column: entries must strictly increase and be >= 1");
        }
    }

    /// (1,...,ell). Named after the crystal convention, although it is the
    /// minimal element of the entrywise order on columns.
    static Column highest_weight(int ell) {
        std::vector<int> e(ell);
        std::iota(e.begin(), e.end(), 1);
        return Column(std::move(e));
    }

    const std::vector<int>& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }
    int entry(int i) const { return entries_[i - 1]; }
    int max_entry() const { return entries_.empty() ? 0 : entries_.back(); }

    bool contains(int x) const {
        return std::binary_search(entries_.begin(), entries_.end(), x);
    }

    bool is_highest_weight() const {
        for (int i = 1; i <= length(); ++i)
            if (entries_[i - 1] != i) return false;
        return true;
    }

    /// The 0/1 indicator vector in Z^n.
    IntVector indicator(int n) const {
        if (max_entry() > n) throw std::invalid_argument("column: entry exceeds n");
        IntVector v(n, 0);
        for (int e : entries_) v[e - 1] = 1;
        return v;
    }

    Column complement(int n) const {
        if (max_entry() > n) throw std::invalid_argument("column: entry exceeds n");
        std::vector<int> out;
        for (int x = 1; x <= n; ++x)
            if (!contains(x)) out.push_back(x);
        return Column(std::move(out));
    }

    bool operator==(const Column& o) const { return entries_ == o.entries_; }
    auto operator<=>(const Column& o) const { return entries_ <=> o.entries_; }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
        os << ")";
        return os.str();
    }

private:
    std::vector<int> entries_;
};

/// Entrywise partial order on columns of equal length.
inline bool column_leq(const Column& e, const Column& f) {
    if (e.length() != f.length()) throw LengthMismatch{};
    for (int i = 1; i <= e.length(); ++i)
        if (e.entry(i) > f.entry(i)) return false;
    return true;
}

/// The action of s_j on a column together with its sign: the entry j is
/// traded for j+1 (or back) when exactly one of them occurs; the sign is -1
/// iff the column strictly increases, i.e. j in C, j+1 not in C.
inline std::pair<Column, int> column_reflect(int j, const Column& c) {
    if (j < 1) throw std::invalid_argument("column_reflect: index must be >= 1");
    const bool has_j = c.contains(j);
    const bool has_j1 = c.contains(j + 1);
    if (has_j == has_j1) return {c, +1};
    std::vector<int> e = c.entries();
    for (int& x : e) {
        if (has_j && x == j) x = j + 1;
        else if (!has_j && x == j + 1) x = j;
    }
    std::sort(e.begin(), e.end());
    return {Column(std::move(e)), has_j ? -1 : +1};
}

/// The minimal coset representative attached to a column: 1..ell map to the
/// entries of I and ell+1..n to the complement, both in increasing order.
inline Permutation u_of_column(const Column& I, int n) {
    std::vector<int> im = I.entries();
    const Column comp = I.complement(n);
    im.insert(im.end(), comp.entries().begin(), comp.entries().end());
    return Permutation(std::move(im));
}

/// All columns of length ell with entries in [n], in lexicographic order.
inline std::vector<Column> enumerate_columns(int ell, int n) {
    if (ell < 1 || ell > n) throw InvalidLength{};
    check_enumeration_guard(n);
    std::vector<Column> out;
    std::vector<int> e(ell);
    std::iota(e.begin(), e.end(), 1);
    while (true) {
        out.emplace_back(e);
        int i = ell - 1;
        while (i >= 0 && e[i] == n - (ell - 1 - i)) --i;
        if (i < 0) break;
        ++e[i];
        for (int k = i + 1; k < ell; ++k) e[k] = e[k - 1] + 1;
    }
    return out;
}

/// A tensor of columns drawn left-to-right with weakly decreasing lengths.
/// Indexing follows the convention that the rightmost column is number 1.
class Filling {
public:
    Filling() = default;
    explicit Filling(std::vector<Column> columns) : columns_(std::move(columns)) {
        for (std::size_t i = 0; i + 1 < columns_.size(); ++i)
            if (columns_[i].length() < columns_[i + 1].length()) throw ColumnOrder{};
    }

    /// Parses row notation, e.g. {{1,1},{3}}.
    static Filling from_rows(const std::vector<std::vector<int>>& rows) {
        for (std::size_t r = 0; r + 1 < rows.size(); ++r)
            if (rows[r].size() < rows[r + 1].size())
                throw std::invalid_argument("rows must have weakly decreasing lengths");
        std::vector<Column> cols;
        const std::size_t width = rows.empty() ? 0 : rows[0].size();
        for (std::size_t c = 0; c < width; ++c) {
            std::vector<int> entries;
            for (const auto& row : rows)
                if (c < row.size()) entries.push_back(row[c]);
            cols.emplace_back(std::move(entries));
        }
        return Filling(std::move(cols));
    }

    /// The tableau of shape lambda whose row i is constantly i.
    static Filling highest_weight(const Partition& lambda) {
        std::vector<Column> cols;
        for (int len : lambda.column_lengths()) cols.push_back(Column::highest_weight(len));
        return Filling(std::move(cols));
    }

    const std::vector<Column>& columns() const { return columns_; }
    int num_columns() const { return static_cast<int>(columns_.size()); }
    bool empty() const { return columns_.empty(); }

    /// Columns count from the right: column 1 is the rightmost.
    const Column& column_from_right(int k) const {
        if (k < 1 || k > num_columns()) throw std::out_of_range("column_from_right");
        return columns_[columns_.size() - k];
    }

    Partition shape() const {
        std::vector<int> parts;
        for (const Column& c : columns_) {
            if (static_cast<int>(parts.size()) < c.length()) parts.resize(c.length(), 0);
            for (int i = 0; i < c.length(); ++i) ++parts[i];
        }
        return Partition(std::move(parts));
    }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out;
        for (const Column& c : columns_) {
            if (static_cast<int>(out.size()) < c.length()) out.resize(c.length());
            for (int i = 1; i <= c.length(); ++i) out[i - 1].push_back(c.entry(i));
        }
        return out;
    }

    int max_entry() const {
        int m = 0;
        for (const Column& c : columns_) m = std::max(m, c.max_entry());
        return m;
    }

    /// Rows weakly increase iff adjacent columns compare entrywise on the
    /// shorter length; columns strictly increase by construction.
    bool is_semistandard() const {
        for (std::size_t i = 0; i + 1 < columns_.size(); ++i) {
            const Column& left = columns_[i];
            const Column& right = columns_[i + 1];
            for (int r = 1; r <= right.length(); ++r)
                if (left.entry(r) > right.entry(r)) return false;
        }
        return true;
    }

    bool is_highest_weight() const {
        for (const Column& c : columns_)
            if (!c.is_highest_weight()) return false;
        return true;
    }

    /// Content vector (c_1,...,c_n), c_i = number of entries equal to i.
    IntVector weight(int n) const {
        if (max_entry() > n) throw std::invalid_argument("filling: entry exceeds n");
        IntVector w(n, 0);
        for (const Column& c : columns_)
            for (int e : c.entries()) ++w[e - 1];
        return w;
    }

    /// Shape formed by the entries <= i (a partition for semistandard T).
    Partition shape_of_entries_leq(int i) const {
        std::vector<int> parts;
        for (const auto& row : rows()) {
            int len = 0;
            for (int v : row) {
                if (v <= i) ++len;
            }
            parts.push_back(len);
        }
        return Partition(std::move(parts));
    }

    /// Concatenation: *this becomes the left block.
    Filling tensor(const Filling& right) const {
        std::vector<Column> cols = columns_;
        cols.insert(cols.end(), right.columns_.begin(), right.columns_.end());
        return Filling(std::move(cols));
    }

    /// Row-major reading word, used as the deterministic enumeration order.
    std::vector<int> reading_word() const {
        std::vector<int> out;
        for (const auto& row : rows()) out.insert(out.end(), row.begin(), row.end());
        return out;
    }

    bool operator==(const Filling& o) const { return columns_ == o.columns_; }
    auto operator<=>(const Filling& o) const { return columns_ <=> o.columns_; }

    /// "[[1,1],[3]]"; the empty filling renders as "[]".
    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        const auto rs = rows();
        for (std::size_t r = 0; r < rs.size(); ++r) {
            os << (r ? "," : "") << "[";
            for (std::size_t c = 0; c < rs[r].size(); ++c) os << (c ? "," : "") << rs[r][c];
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    std::vector<Column> columns_;
};

/// Applies s_j to the k rightmost columns and leaves the rest untouched.
inline Filling omega(const Filling& T, int j, int k) {
    if (k < 1 || k > T.num_columns()) throw std::out_of_range("omega: column index");
    std::vector<Column> cols = T.columns();
    const int r = T.num_columns();
    for (int idx = r - k; idx < r; ++idx) cols[idx] = column_reflect(j, cols[idx]).first;
    return Filling(std::move(cols));
}

/// All partitions with |lambda| <= max_weight and at most max_rows parts,
/// the empty shape included, in lexicographic order.
inline std::vector<Partition> enumerate_partitions(int max_weight, int max_rows) {
    std::vector<Partition> out{Partition{}};
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (!parts.empty()) out.emplace_back(parts);
        if (static_cast<int>(parts.size()) == max_rows) return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, max_weight, max_weight);
    std::sort(out.begin(), out.end());
    return out;
}

/// All column tensors of the given shape with entries in [n], including the
/// non-semistandard ones; ordered lexicographically by column tuple.
inline std::vector<Filling> enumerate_column_fillings(const Partition& lambda, int n) {
    if (lambda.num_rows() > n) throw std::invalid_argument("shape has more than n rows");
    std::vector<Filling> out;
    if (lambda.empty()) {
        out.emplace_back();
        return out;
    }
    const std::vector<int> lens = lambda.column_lengths();
    std::vector<std::vector<Column>> pools;
    for (int len : lens) pools.push_back(enumerate_columns(len, n));
    std::vector<std::size_t> idx(lens.size(), 0);
    while (true) {
        std::vector<Column> cols;
        for (std::size_t c = 0; c < lens.size(); ++c) cols.push_back(pools[c][idx[c]]);
        out.emplace_back(std::move(cols));
        std::size_t c = lens.size();
        while (c > 0) {
            --c;
            if (++idx[c] < pools[c].size()) break;
            idx[c] = 0;
            if (c == 0) return out;
        }
    }
}

/// All semistandard Young tableaux of the given shape with entries in [n],
/// sorted lexicographically by row reading word.
inline std::vector<Filling> enumerate_ssyt(const Partition& lambda, int n) {
    std::vector<Filling> out;
    for (const Filling& T : enumerate_column_fillings(lambda, n))
        if (T.is_semistandard()) out.push_back(T);
    std::sort(out.begin(), out.end(), [](const Filling& a, const Filling& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

/// The Hasse diagram of the column poset as a DOT digraph; each cover is an
/// edge C -> s_jC labeled by the simple reflection that produces it.
inline std::string hasse_dot(int ell, int n) {
    const std::vector<Column> cols = enumerate_columns(ell, n);
    auto node = [](const Column& c) {
        std::string s = "\"";
        for (std::size_t i = 0; i < c.entries().size(); ++i)
            s += (i ? "," : "") + std::to_string(c.entries()[i]);
        return s + "\"";
    };
    std::ostringstream os;
    os << "digraph columns {\n";
    os << "  rankdir=BT;\n";
    for (const Column& c : cols) os << "  " << node(c) << ";\n";
    for (const Column& c : cols) {
        for (int j = 1; j < n; ++j) {
            if (c.contains(j) && !c.contains(j + 1))
                os << "  " << node(c) << " -> " << node(column_reflect(j, c).first)
                   << " [label=\"s" << j << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace hlpoly
