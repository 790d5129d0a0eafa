#pragma once

// Odd tangent numbers and similarity types of strongly diagonal tuples.
//
// A type is recorded as an increasing full binary tree: the meet tree of the
// binary stems, each node labelled by the rank of its level among all 2l-1
// levels. Text form: a leaf is "r", an inner node "r[left,right]".

#include "dualramsey/surjections.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace dualramsey {

using BigInt = boost::multiprecision::cpp_int;

/// t_k = tan^{(2k-1)}(0); k >= 1.
BigInt tangent_number(unsigned k);
/// t_1..t_n.
std::vector<BigInt> tangent_table(unsigned n);

struct ClosureNode {
    Word word;
    int parent = -1;  // longest proper prefix in the closure
    int leaf = -1;    // index in the tuple when the node is a stem
};

/// Stems of the binary encodings plus all pairwise meets, sorted by (length, lex).
struct MeetClosure {
    std::vector<Word> stems;
    std::vector<ClosureNode> nodes;
    bool antichain = true;
};

MeetClosure meet_closure(const std::vector<Point>& tuple);

bool is_strongly_diagonal(const std::vector<Point>& tuple);

class TreeType {
public:
    struct Vertex {
        int label = 0;
        int left = -1;
        int right = -1;
    };

    /// Builds and checks an increasing full binary tree; vertex 0 is the root.
    explicit TreeType(std::vector<Vertex> vertices);
    static TreeType parse(const std::string& text);
    static TreeType leaf();
    static TreeType unrank(unsigned leaves, const BigInt& rank);

    unsigned leaves() const { return static_cast<unsigned>((vertices_.size() + 1) / 2); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::string& encoding() const { return encoding_; }
    /// Position in the fixed canonical order of all types with this many leaves.
    BigInt rank() const;

    bool operator==(const TreeType& o) const { return encoding_ == o.encoding_; }

private:
    std::vector<Vertex> vertices_;
    std::string encoding_;
};

/// Throws std::invalid_argument unless the tuple is strongly diagonal.
TreeType similarity_type(const std::vector<Point>& tuple);

/// All types with l leaves in rank order, found by direct enumeration of
/// shapes and labellings; l <= 6.
std::vector<TreeType> enumerate_types(unsigned l);

/// Rank of the tuple's type when strongly diagonal, else 0.
BigInt canonical_coloring(const std::vector<Point>& tuple);

struct TypeHit {
    std::vector<Point> tuple;
    unsigned depth = 0;
};

/// Iterative deepening over max_set(h, d), d = 1..cap: the first tuple found
/// for each wanted rank (all ranks when `wanted` is empty). At each depth only
/// tuples with a point new at that depth are examined.
std::map<BigInt, TypeHit> search_types(const Surjection& h, unsigned l, unsigned cap,
                                       const std::vector<BigInt>& wanted = {});

std::optional<TypeHit> search_tuple_of_type(const Surjection& h, const TreeType& type, unsigned cap);

} // namespace dualramsey
