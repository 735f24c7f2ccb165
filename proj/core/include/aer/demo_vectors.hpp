#ifndef AER_DEMO_VECTORS_HPP
#define AER_DEMO_VECTORS_HPP

#include "aer/protocol.hpp"

namespace aer::demo {

// The hard-coded two-party example: 5-element public sets at dimension 2,
// Alice's word a1 . a3^2 . a5^-1, Bob's word b1^3 . b2^-2 . b4, shared key
// {{136,128},{80,156}}.
const PublicParams& params();
const GeneratorWord& word_alice();
const GeneratorWord& word_bob();

// Every intermediate value the example lists, in order and under the same
// names run_session uses.
const Transcript& expected_transcript();

const Matrix& expected_key();

} // namespace aer::demo

#endif
