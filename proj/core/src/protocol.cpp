#include "aer/protocol.hpp"

#include <sstream>
#include <utility>

namespace aer {
namespace {

Matrix factor_value(const WordFactor& f, const std::vector<Matrix>& set) {
    if (f.index < 1 || static_cast<std::size_t>(f.index) > set.size()) throw IndexOutOfRange(f.index);
    if (f.exponent == 0) throw BadParameters("zero exponent in generator word");
    const Matrix& base = set[static_cast<std::size_t>(f.index - 1)];
    if (f.exponent > 0) return mat_pow(base, static_cast<std::uint64_t>(f.exponent));
    Matrix limit_power = inverse_shortcut(base);
    return mat_pow(limit_power, static_cast<std::uint64_t>(-static_cast<std::int64_t>(f.exponent)));
}

} // namespace

Matrix eval_word_with_parts(const GeneratorWord& word, const std::vector<Matrix>& set,
                            std::vector<Matrix>& parts) {
    if (set.empty()) throw BadParameters("empty generator set");
    const int n = set.front().dim();
    for (const Matrix& m : set)
        if (m.dim() != n) throw DimensionMismatch(n, m.dim());
    Matrix acc = Matrix::identity(n);
    parts.clear();
    for (const WordFactor& f : word) {
        Matrix v = factor_value(f, set);
        acc = mat_mul(acc, v);
        parts.push_back(std::move(v));
    }
    return acc;
}

Matrix eval_word(const GeneratorWord& word, const std::vector<Matrix>& set) {
    std::vector<Matrix> parts;
    return eval_word_with_parts(word, set, parts);
}

Matrix conjugate(const Matrix& g, const Matrix& x, const Matrix& x_inv) {
    if (!(mat_mul(x_inv, x) == Matrix::identity(x.dim()))) throw NotAnInverse{};
    return mat_mul(mat_mul(x_inv, g), x);
}

PartyState make_party(Role role, const PublicParams& params, const GeneratorWord& word) {
    const std::vector<Matrix>& own = role == Role::Alice ? params.set_a : params.set_b;
    Matrix x = eval_word(word, own);
    InverseResult inv = verified_inverse(x);
    if (inv.kind != InverseResult::Kind::Verified) throw PrivateElementSingular{};
    return PartyState{role, &params, word, std::move(x), std::move(*inv.value)};
}

std::vector<Matrix> commit(const PartyState& state) {
    const std::vector<Matrix>& peer_set =
        state.role == Role::Alice ? state.params->set_b : state.params->set_a;
    std::vector<Matrix> out;
    out.reserve(peer_set.size());
    for (const Matrix& g : peer_set)
        out.push_back(conjugate(g, state.private_element, state.private_inverse));
    return out;
}

Matrix derive_key(const PartyState& state, const std::vector<Matrix>& received) {
    const std::vector<Matrix>& own_set =
        state.role == Role::Alice ? state.params->set_a : state.params->set_b;
    if (received.size() != own_set.size())
        throw DimensionMismatch(static_cast<int>(own_set.size()), static_cast<int>(received.size()));
    Matrix prime = eval_word(state.word, received);
    if (state.role == Role::Alice) return mat_mul(state.private_inverse, prime);
    Matrix inv_key = mat_mul(state.private_inverse, prime);
    InverseResult inv = verified_inverse(inv_key);
    if (inv.kind != InverseResult::Kind::Verified) throw KeyInversionFailed{};
    return std::move(*inv.value);
}

Matrix commutator_oracle(const Matrix& x, const Matrix& y) {
    InverseResult ix = verified_inverse(x);
    InverseResult iy = verified_inverse(y);
    if (ix.kind != InverseResult::Kind::Verified || iy.kind != InverseResult::Kind::Verified)
        throw NotInvertible{};
    return mat_mul(mat_mul(mat_mul(*ix.value, *iy.value), x), y);
}

GeneratorWord random_word(int set_size, int length, SeededRng& rng) {
    if (set_size < 1 || length < 1) throw BadParameters("set_size and length must be >= 1");
    static constexpr int exponents[] = {-3, -2, -1, 1, 2, 3};
    GeneratorWord w;
    w.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        int idx = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(set_size))) + 1;
        int e = exponents[rng.next_below(6)];
        w.push_back(WordFactor{idx, e});
    }
    return w;
}

PublicParams random_params(int n, int k, int m, SeededRng& rng) {
    if (n < 1) throw BadDimension(n);
    if (k < 1 || m < 1) throw BadParameters("set sizes must be >= 1");
    PublicParams p{n, {}, {}};
    p.set_a.reserve(static_cast<std::size_t>(k));
    p.set_b.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < k; ++i) p.set_a.push_back(Matrix::random(n, rng));
    for (int i = 0; i < m; ++i) p.set_b.push_back(Matrix::random(n, rng));
    return p;
}

namespace {

void record_parts(Transcript& t, const char* stem, const std::vector<Matrix>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        t.push_back({std::string(stem) + std::to_string(i + 1), {parts[i]}});
}

} // namespace

SessionResult run_session(const PublicParams& params, const GeneratorWord& word_a,
                          const GeneratorWord& word_b) {
    Transcript t;

    // step 1: Alice's private element and commit
    std::vector<Matrix> x_parts;
    Matrix x = eval_word_with_parts(word_a, params.set_a, x_parts);
    record_parts(t, "x", x_parts);
    t.push_back({"x", {x}});
    PartyState alice = make_party(Role::Alice, params, word_a);
    t.push_back({"invx", {alice.private_inverse}});
    std::vector<Matrix> a_prime = commit(alice);
    t.push_back({"APrime", a_prime});

    // step 2: Bob's private element and commit
    std::vector<Matrix> y_parts;
    Matrix y = eval_word_with_parts(word_b, params.set_b, y_parts);
    record_parts(t, "y", y_parts);
    t.push_back({"y", {y}});
    PartyState bob = make_party(Role::Bob, params, word_b);
    t.push_back({"iny", {bob.private_inverse}});
    std::vector<Matrix> b_prime = commit(bob);
    t.push_back({"BPrime", b_prime});

    // step 3: Alice derives from BPrime
    std::vector<Matrix> xp_parts;
    Matrix xprime = eval_word_with_parts(word_a, b_prime, xp_parts);
    record_parts(t, "xprime", xp_parts);
    t.push_back({"xprime", {xprime}});
    Matrix key_alice = derive_key(alice, b_prime);
    t.push_back({"KEYalice", {key_alice}});

    // step 4: Bob derives from APrime
    std::vector<Matrix> yp_parts;
    Matrix yprime = eval_word_with_parts(word_b, a_prime, yp_parts);
    record_parts(t, "yprime", yp_parts);
    t.push_back({"yprime", {yprime}});
    Matrix inv_key = mat_mul(bob.private_inverse, yprime);
    t.push_back({"invKey", {inv_key}});
    Matrix key_bob = derive_key(bob, a_prime);
    t.push_back({"KEYbob", {key_bob}});

    return SessionResult{std::move(key_alice), std::move(key_bob), std::move(t)};
}

std::string format_word(const GeneratorWord& word, char symbol) {
    if (word.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << " . ";
        os << symbol << word[i].index;
        if (word[i].exponent != 1) os << "^" << word[i].exponent;
    }
    return os.str();
}

} // namespace aer
