#ifndef AER_PROTOCOL_HPP
#define AER_PROTOCOL_HPP

#include <string>
#include <vector>

#include "aer/matrix.hpp"
#include "aer/order.hpp"
#include "aer/rng.hpp"

namespace aer {

// One factor of a formal word over a public generator set: 1-based index
// and a nonzero signed exponent.
struct WordFactor {
    int index;
    int exponent;

    bool operator==(const WordFactor&) const = default;
};

using GeneratorWord = std::vector<WordFactor>;

struct PublicParams {
    int dim;
    std::vector<Matrix> set_a;
    std::vector<Matrix> set_b;
};

enum class Role { Alice, Bob };

struct PartyState {
    Role role;
    const PublicParams* params;
    GeneratorWord word;
    Matrix private_element;
    Matrix private_inverse;
};

// Named intermediate values in the order the worked example lists them.
struct TranscriptEntry {
    std::string name;
    std::vector<Matrix> matrices;
};
using Transcript = std::vector<TranscriptEntry>;

struct SessionResult {
    Matrix key_alice;
    Matrix key_bob;
    Transcript transcript;
};

// Left-to-right product of set[i]^e over the factors. A negative exponent e
// is evaluated as (set[i]^limit)^|e| with limit = 256^(n^2) - 2, the
// convention of the worked example; an empty word gives the identity.
Matrix eval_word(const GeneratorWord& word, const std::vector<Matrix>& set);

// As eval_word, also reporting the per-factor values.
Matrix eval_word_with_parts(const GeneratorWord& word, const std::vector<Matrix>& set,
                            std::vector<Matrix>& parts);

// x_inv * g * x; checks that x_inv really inverts x.
Matrix conjugate(const Matrix& g, const Matrix& x, const Matrix& x_inv);

// Evaluates the private word and computes the verified inverse; throws
// PrivateElementSingular when the word lands on a singular matrix.
PartyState make_party(Role role, const PublicParams& params, const GeneratorWord& word);

// Alice conjugates set B by her private element, Bob conjugates set A.
std::vector<Matrix> commit(const PartyState& state);

// The receiving half of the exchange: evaluate the own word over the peer's
// conjugated set and cancel the private element, leaving the commutator
// x^-1 y^-1 x y on both sides.
Matrix derive_key(const PartyState& state, const std::vector<Matrix>& received);

// x^-1 y^-1 x y with verified inverses; the reference both parties must hit.
Matrix commutator_oracle(const Matrix& x, const Matrix& y);

// length factors, index uniform in [1, set_size], exponent uniform in
// {-3,-2,-1,1,2,3}.
GeneratorWord random_word(int set_size, int length, SeededRng& rng);

// Runs both roles end to end, recording every intermediate in the worked
// example's order and naming.
SessionResult run_session(const PublicParams& params, const GeneratorWord& word_a,
                          const GeneratorWord& word_b);

/// Fresh uniform parameters: k matrices in A and m in B, all of dimension n.
PublicParams random_params(int n, int k, int m, SeededRng& rng);

std::string format_word(const GeneratorWord& word, char symbol);

} // namespace aer

#endif
