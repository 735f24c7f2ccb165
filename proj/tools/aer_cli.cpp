// Command-line front end: worked-example demo, seeded handshakes, and
// matrix inspection (order, inverse, determinant, cycle shape, views).

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aer/demo_vectors.hpp"
#include "aer/matrix.hpp"
#include "aer/order.hpp"
#include "aer/protocol.hpp"
#include "aer/wire.hpp"

namespace {

using namespace aer;

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::TrueIdentity: return "TrueIdentity";
        case Classification::SpuriousIdentity: return "SpuriousIdentity";
        case Classification::ZeroAbsorbing: return "ZeroAbsorbing";
    }
    return "?";
}

void print_transcript_entry(const TranscriptEntry& e) {
    std::cout << e.name << " = ";
    if (e.matrices.size() == 1) {
        std::cout << to_text(e.matrices[0]) << "\n";
        return;
    }
    std::cout << "{";
    for (std::size_t i = 0; i < e.matrices.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << to_text(e.matrices[i]);
    }
    std::cout << "}\n";
}

int cmd_demo() {
    std::cout << "AAG-KEP worked example, dim = 2, limit = 256^4 - 2\n";
    std::cout << "f = " << format_word(demo::word_alice(), 'a') << "\n";
    std::cout << "g = " << format_word(demo::word_bob(), 'b') << "\n\n";

    SessionResult session = run_session(demo::params(), demo::word_alice(), demo::word_bob());

    int mismatches = 0;
    const Transcript& expected = demo::expected_transcript();
    for (std::size_t i = 0; i < session.transcript.size(); ++i) {
        const TranscriptEntry& got = session.transcript[i];
        print_transcript_entry(got);
        if (i >= expected.size() || expected[i].name != got.name ||
            expected[i].matrices != got.matrices) {
            std::cout << "  ** MISMATCH, expected ";
            if (i < expected.size())
                print_transcript_entry(expected[i]);
            else
                std::cout << "(nothing)\n";
            ++mismatches;
        }
    }
    std::cout << "\nshared key " << to_text(session.key_alice)
              << (session.key_alice == session.key_bob ? " (parties agree)" : " (PARTIES DISAGREE)")
              << "\n";
    if (!(session.key_alice == session.key_bob)) ++mismatches;
    if (mismatches) {
        std::cout << mismatches << " mismatch(es) against the reference transcript\n";
        return 1;
    }
    return 0;
}

int cmd_handshake(int dim, int set_size, int word_len, std::uint64_t seed, int tcp_port,
                  bool use_tcp) {
    SeededRng rng(seed);
    for (int attempt = 1; attempt <= 16; ++attempt) {
        PublicParams params = random_params(dim, set_size, set_size, rng);
        GeneratorWord wa = random_word(set_size, word_len, rng);
        GeneratorWord wb = random_word(set_size, word_len, rng);
        try {
            wire::HandshakeOutcome out = [&] {
                if (use_tcp) {
                    wire::TcpListener listener(static_cast<std::uint16_t>(tcp_port));
                    auto client = wire::tcp_connect(listener.bound_port());
                    auto server = listener.accept();
                    std::cout << "transport: tcp loopback port " << listener.bound_port() << "\n";
                    return wire::run_handshake_over_channel(params, wa, wb, *client, *server);
                }
                auto [alice_end, bob_end] = wire::make_in_process_pair();
                std::cout << "transport: in-process duplex\n";
                return wire::run_handshake_over_channel(params, wa, wb, *alice_end, *bob_end);
            }();
            std::cout << "attempt " << attempt << ": KEYalice = " << to_text(out.key_alice)
                      << "\n           KEYbob   = " << to_text(out.key_bob) << "\n";
            if (!(out.key_alice == out.key_bob)) {
                std::cout << "keys disagree\n";
                return 1;
            }
            std::cout << "keys agree\n";
            return 0;
        } catch (const PrivateElementSingular&) {
            std::cout << "attempt " << attempt << ": singular private element, retrying\n";
        } catch (const KeyInversionFailed&) {
            std::cout << "attempt " << attempt << ": key inversion failed, retrying\n";
        }
    }
    std::cout << "no session completed in 16 attempts\n";
    return 1;
}

int cmd_order(const std::string& text) {
    Matrix x = parse_matrix(text);
    auto d = multiplicative_order(x);
    if (d)
        std::cout << "order " << *d << "\n";
    else
        std::cout << "no multiplicative order (power cycle never reaches identity)\n";
    return 0;
}

int cmd_inverse(const std::string& text) {
    Matrix x = parse_matrix(text);
    InverseResult r = verified_inverse(x);
    switch (r.kind) {
        case InverseResult::Kind::Verified:
            std::cout << "verified inverse " << to_text(*r.value) << "\n";
            break;
        case InverseResult::Kind::Spurious:
            std::cout << "spurious inverse " << to_text(*r.value)
                      << " (product is a spurious identity, not the identity)\n";
            break;
        case InverseResult::Kind::NotInvertible:
            std::cout << "not invertible (power cycle collapses to the zero matrix)\n";
            break;
    }
    return 0;
}

int cmd_det(const std::string& text) {
    std::cout << static_cast<int>(tensor_det(parse_matrix(text))) << "\n";
    return 0;
}

int cmd_cycle(const std::string& text) {
    CycleInfo ci = brent_cycle(parse_matrix(text));
    std::cout << "tail " << ci.tail << ", period " << ci.period << ", terminal "
              << to_text(ci.terminal) << ", " << classification_name(ci.classification) << "\n";
    return 0;
}

int cmd_census(int dim, long long samples, std::uint64_t seed) {
    SeededRng rng(seed);
    CensusResult r = generator_census(dim, samples, rng);
    std::cout << "samples              " << r.samples << "\n"
              << "invertible           " << r.invertible << " (" << r.invertible_fraction() << ")\n"
              << "shortcut failures    " << r.shortcut_failures << " ("
              << r.shortcut_failure_fraction() << " of invertible)\n";
    return 0;
}

int cmd_views(const std::string& text) {
    MatrixViews v = render_views(parse_matrix(text));
    std::cout << "Decimal view:\n" << v.decimal
              << "Tensor view:\n" << v.bit_tensor
              << "Polynomial view:\n" << v.polynomial;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"AER matrix ring over the AES field with AAG key exchange"};
    app.require_subcommand(1);

    app.add_subcommand("demo", "run the hard-coded worked example and check every intermediate");

    auto* handshake = app.add_subcommand("handshake", "seeded randomized two-party session");
    int dim = 2, set_size = 100, word_len = 8, tcp_port = 0;
    std::uint64_t seed = 1;
    bool loopback = false;
    handshake->add_option("--dim", dim, "matrix dimension")
        ->check(CLI::Range(1, 8))
        ->envname("AER_DIM");
    handshake->add_option("--set-size", set_size, "public set size (k = m)")
        ->check(CLI::PositiveNumber)
        ->envname("AER_SET_SIZE");
    handshake->add_option("--word-len", word_len, "private word length")
        ->check(CLI::PositiveNumber)
        ->envname("AER_WORD_LEN");
    handshake->add_option("--seed", seed, "rng seed")->envname("AER_SEED");
    auto* tcp_opt = handshake->add_option("--tcp", tcp_port, "run over TCP loopback on this port (0 = auto)");
    handshake->add_flag("--loopback", loopback, "run over an in-process duplex (default)");

    std::string matrix_text;
    auto* order_cmd = app.add_subcommand("order", "multiplicative order of a matrix");
    order_cmd->add_option("matrix", matrix_text, "matrix as {{a,b},{c,d}}")->required();
    auto* inverse_cmd = app.add_subcommand("inverse", "verified / spurious inverse of a matrix");
    inverse_cmd->add_option("matrix", matrix_text)->required();
    auto* det_cmd = app.add_subcommand("det", "tensor determinant of a matrix");
    det_cmd->add_option("matrix", matrix_text)->required();
    auto* cycle_cmd = app.add_subcommand("cycle", "tail, period and terminal of the power cycle");
    cycle_cmd->add_option("matrix", matrix_text)->required();
    auto* views_cmd = app.add_subcommand("views", "decimal, bit-tensor and polynomial renderings");
    views_cmd->add_option("matrix", matrix_text)->required();

    auto* census = app.add_subcommand("census", "invertible fraction and shortcut failure rate");
    int census_dim = 2;
    long long census_samples = 100000;
    std::uint64_t census_seed = 1;
    census->add_option("--dim", census_dim)->check(CLI::Range(1, 8));
    census->add_option("--samples", census_samples)->check(CLI::PositiveNumber);
    census->add_option("--seed", census_seed);

    auto* card = app.add_subcommand("cardinality", "number of elements at a dimension");
    int card_dim = 2;
    card->add_option("--dim", card_dim)->check(CLI::Range(1, 8))->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("demo")) return cmd_demo();
        if (app.got_subcommand(handshake))
            return cmd_handshake(dim, set_size, word_len, seed, tcp_port, tcp_opt->count() > 0);
        if (app.got_subcommand(order_cmd)) return cmd_order(matrix_text);
        if (app.got_subcommand(inverse_cmd)) return cmd_inverse(matrix_text);
        if (app.got_subcommand(det_cmd)) return cmd_det(matrix_text);
        if (app.got_subcommand(cycle_cmd)) return cmd_cycle(matrix_text);
        if (app.got_subcommand(views_cmd)) return cmd_views(matrix_text);
        if (app.got_subcommand(census)) return cmd_census(census_dim, census_samples, census_seed);
        if (app.got_subcommand(card)) {
            std::cout << aer::cardinality(card_dim) << "\n";
            return 0;
        }
    } catch (const aer::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
