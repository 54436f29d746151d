/*
   Copyright 2026 The posflag authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


/*
   Triangle and shear invariants of a flag decoration on a finite lamination,
   the relations they satisfy, and closed-leaf products.

   The lamination is pure combinatorics on endpoint labels. Triangle vertices
   are listed clockwise; vertex index v reads the triangle as
   (vs[v], vs[v+1], vs[v+2]) cyclically. Labels stand for one lift each, so
   a leaf may border a translate of a listed triangle.
*/

#ifndef POSFLAG_BD_COORDS_HPP
#define POSFLAG_BD_COORDS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posflag/reps.hpp"

namespace posflag {

struct LamTriangle {
    std::string id;
    std::array<std::string, 3> vertices;
};

struct InfiniteLeaf {
    std::string id;
    std::string plus, minus;
    std::string left, right;  // third vertices of the bordering triangles
};

struct SpiralLeaf {
    std::string leaf;
    bool toward = true;
};

struct SpiralTriangle {
    std::string triangle;
    int vertex = 0;
};

struct SpiralSide {
    bool with_orientation = true;
    std::vector<SpiralLeaf> leaves;
    std::vector<SpiralTriangle> triangles;
};

struct ClosedLeaf {
    std::string id;
    std::string plus, minus;
    std::optional<std::string> left, right;  // arc endpoints z, z'
    std::optional<SpiralSide> left_side, right_side;
};

struct LaminationGraph {
    std::vector<std::string> endpoints;  // clockwise
    std::vector<LamTriangle> triangles;
    std::vector<InfiniteLeaf> infinite_leaves;
    std::vector<ClosedLeaf> closed_leaves;

    size_t r() const { return triangles.size(); }
    size_t q() const { return infinite_leaves.size(); }
    size_t p() const { return closed_leaves.size(); }
    size_t coordinate_count(size_t n) const;

    // Throws Schema on dangling references or malformed spiral data.
    void validate() const;

    const LamTriangle& triangle(const std::string& id) const;
    const InfiniteLeaf& infinite_leaf(const std::string& id) const;
    const ClosedLeaf& closed_leaf(const std::string& id) const;
};

using FlagDecoration = std::map<std::string, Flag>;

// label -> stable flag of the image of its word.
FlagDecoration decorate(const Representation& rep, const std::map<std::string, std::string>& points);

FlagDecoration act(const Matrix& g, const FlagDecoration& dec);

// Keys "x/t/v/a.b.c" and "y/l/m"; x entries first, then infinite leaves,
// then closed leaves, each in lamination order.
class CoordinateVector {
public:
    CoordinateVector() = default;
    CoordinateVector(size_t n, std::vector<std::pair<std::string, FieldElement>> entries);

    size_t n() const { return n_; }
    size_t size() const { return entries_.size(); }
    const std::vector<std::pair<std::string, FieldElement>>& entries() const { return entries_; }
    const FieldElement& at(const std::string& key) const;
    FieldElement& at(const std::string& key);
    bool contains(const std::string& key) const { return index_.count(key) != 0; }

    friend bool operator==(const CoordinateVector& a, const CoordinateVector& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    size_t n_ = 0;
    std::vector<std::pair<std::string, FieldElement>> entries_;
    std::map<std::string, size_t> index_;
};

std::string x_key(const std::string& t, int v, int a, int b, int c);
std::string y_key(const std::string& leaf, int m);
std::vector<std::string> coordinate_schema(const LaminationGraph& lam, size_t n);

FieldElement triangle_invariant(const FlagDecoration& dec, const LamTriangle& t, int v, int a, int b, int c);
FieldElement shear_infinite(const FlagDecoration& dec, const InfiniteLeaf& h, int a);
FieldElement shear_closed(const FlagDecoration& dec, const ClosedLeaf& g, int a);

CoordinateVector compute_coordinates(const FlagDecoration& dec, const LaminationGraph& lam, size_t n);

// D_a(h) for a leaf oriented toward the closed leaf, D_{n-a}(h) otherwise.
FieldElement dbar(const CoordinateVector& coords, const SpiralLeaf& h, int a);
FieldElement dbar(const FlagDecoration& dec, const LaminationGraph& lam, const SpiralLeaf& h, int a, size_t n);

// Sides without spiral data are left empty.
struct LeafProducts {
    std::optional<FieldElement> right, left;
};

LeafProducts closed_leaf_products(const CoordinateVector& coords, const LaminationGraph& lam, const ClosedLeaf& g,
                                  int a);
LeafProducts closed_leaf_products(const FlagDecoration& dec, const LaminationGraph& lam, const ClosedLeaf& g, int a,
                                  size_t n);

struct RelationCheck {
    std::string relation;  // positivity, rotation, closed_leaf_equality, closed_leaf_inequality
    std::string instance;
    bool ok = false;
    std::vector<std::pair<std::string, FieldElement>> values;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    // Relation instances that could not be evaluated, with the reason.
    std::vector<std::pair<std::string, std::string>> skipped;
    bool ok() const;
    std::vector<const RelationCheck*> failures() const;
};

RelationReport verify_relations(const CoordinateVector& coords, const LaminationGraph& lam);

struct ClosedLeafHolonomy {
    std::string leaf;
    Matrix holonomy;
};

struct EigenRelation {
    bool holds = false;
    std::vector<FieldElement> ratios;  // lambda_a / lambda_{a+1}, a = 1..n-1
    LeafProducts products;
};

// lambda_a is read off the eigenline in dec(g+)^(a) cap dec(g-)^(n-a+1).
EigenRelation eigenvalue_relation(const FlagDecoration& dec, const LaminationGraph& lam, const ClosedLeafHolonomy& hol);
bool eigenvalue_relation(const FlagDecoration& dec, const LaminationGraph& lam, const ClosedLeafHolonomy& hol, int a);

std::optional<Matrix> conjugacy_detect(const FlagDecoration& dec1, const FlagDecoration& dec2);

}  // namespace posflag

#endif
