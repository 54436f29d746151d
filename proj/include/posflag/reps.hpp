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
   Surface group representation data on finite word samples.

   Words are whitespace-separated tokens "x", "x^-1" or "x^k" over the
   generator names; the empty string is the identity.
*/

#ifndef POSFLAG_REPS_HPP
#define POSFLAG_REPS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posflag/flags.hpp"

namespace posflag {

struct Letter {
    std::string gen;
    long power = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

Word parse_word(const std::string& s);
std::string word_str(const Word& w);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);

struct Representation {
    std::optional<int> genus;  // nullopt: free-group mode
    bool projective = false;
    std::map<std::string, Matrix> generators;

    size_t n() const;
    FieldKind kind() const;
};

// Symmetric power action on degree n-1 binary forms, basis X^(n-1), X^(n-2) Y, ..., Y^(n-1).
Matrix iota(const Matrix& A, size_t n);
Representation iota(const Representation& rep, size_t n);

Matrix word_image(const Representation& rep, const Word& w);
Matrix word_image(const Representation& rep, const std::string& w);

// prod_i [a_i, b_i] with [a, b] = a b a^-1 b^-1.
Word surface_relation(int genus);
bool verify_relation(const Representation& rep);

struct WordVerdict {
    std::string word;
    bool verdict = false;
    std::string error;  // empty unless a precondition failed
};

std::vector<WordVerdict> certify_positively_hyperbolic(const Representation& rep, const std::vector<std::string>& words);

// Words listed in clockwise order of their attracting fixed points; each
// coincidence group names words declared to share that point.
struct WitnessOrder {
    std::vector<std::string> words;
    std::vector<std::vector<std::string>> coincide;
};

std::map<std::string, Flag> limit_flags(const Representation& rep, const std::vector<std::string>& words,
                                        const std::vector<std::vector<std::string>>& coincide = {});

struct WitnessFailure {
    std::vector<std::string> words;
    std::string reason;
};

struct WitnessReport {
    size_t triples = 0, quadruples = 0;
    std::vector<WitnessFailure> failures;
    bool ok() const { return failures.empty(); }
};

WitnessReport check_positive_on_witness(const Representation& rep, const WitnessOrder& order);

// Positive triple and positive quadruple in the sense of the basic definitions.
bool is_positive_triple(const Flag& E, const Flag& F, const Flag& G);
bool is_positive_quadruple(const Flag& E, const Flag& F, const Flag& G, const Flag& H);

// Burnside span test over words of length <= max_word_length (default 2n).
// Sound for true; false may mean the bound was too small.
bool is_irreducible(const std::vector<Matrix>& mats, std::optional<size_t> max_word_length = std::nullopt);

}  // namespace posflag

#endif
