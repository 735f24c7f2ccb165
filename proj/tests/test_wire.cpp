#include <doctest.h>

#include "aer/demo_vectors.hpp"
#include "aer/wire.hpp"

using namespace aer;
using namespace aer::wire;

namespace {

Matrix random_msg_matrix(int dim, SeededRng& rng) { return Matrix::random(dim, rng); }

HandshakeMessage random_message(SeededRng& rng) {
    static const MsgType types[] = {MsgType::Params, MsgType::CommitAlice, MsgType::CommitBob,
                                    MsgType::KeyReveal};
    MsgType t = types[rng.next_below(4)];
    int dim = static_cast<int>(rng.next_below(4)) + 1;
    HandshakeMessage m{t, dim, {}, {}};
    int count = static_cast<int>(rng.next_below(6));
    for (int i = 0; i < count; ++i) m.matrices.push_back(random_msg_matrix(dim, rng));
    if (t == MsgType::Params) {
        int count_b = static_cast<int>(rng.next_below(6)) + 1;
        for (int i = 0; i < count_b; ++i) m.set_b.push_back(random_msg_matrix(dim, rng));
    }
    return m;
}

} // namespace

TEST_CASE("matrix codec") {
    CHECK(encode_matrix(Matrix::identity(2)) == std::vector<std::uint8_t>{1, 0, 0, 1});
    CHECK(encode_matrix(Matrix(2, {183, 62, 77, 50})) ==
          std::vector<std::uint8_t>{0xB7, 0x3E, 0x4D, 0x32});
    CHECK(decode_matrix({0xB7, 0x3E, 0x4D, 0x32}, 2) == Matrix(2, {183, 62, 77, 50}));
    CHECK_THROWS_AS(decode_matrix({1, 2, 3}, 2), LengthMismatch);
}

TEST_CASE("frame layout") {
    PartyState alice = make_party(Role::Alice, demo::params(), demo::word_alice());
    HandshakeMessage m{MsgType::CommitAlice, 2, commit(alice), {}};
    std::vector<std::uint8_t> frame = encode_message(m);
    CHECK(frame.size() == 4 + 1 + 1 + 1 + 2 + 20);
    CHECK(frame[0] == 'A');
    CHECK(frame[1] == 'E');
    CHECK(frame[2] == 'R');
    CHECK(frame[3] == '1');
    CHECK(frame[4] == 0x01); // version
    CHECK(frame[5] == 0x02); // COMMIT_ALICE
    CHECK(frame[6] == 2);    // dim
    CHECK(frame[7] == 0);    // count hi
    CHECK(frame[8] == 5);    // count lo
    CHECK(decode_message(frame) == m);
}

TEST_CASE("round trip on fuzzed messages") {
    SeededRng rng(101);
    for (int trial = 0; trial < 500; ++trial) {
        HandshakeMessage m = random_message(rng);
        REQUIRE(decode_message(encode_message(m)) == m);
    }
}

TEST_CASE("malformed frames are rejected with the specific error") {
    HandshakeMessage m{MsgType::CommitBob, 2, {Matrix::identity(2)}, {}};
    std::vector<std::uint8_t> good = encode_message(m);

    std::vector<std::uint8_t> bad_magic = good;
    bad_magic[0] = 'X';
    CHECK_THROWS_AS(decode_message(bad_magic), BadMagic);

    std::vector<std::uint8_t> bad_version = good;
    bad_version[4] = 0x02;
    CHECK_THROWS_AS(decode_message(bad_version), BadVersion);

    std::vector<std::uint8_t> bad_type = good;
    bad_type[5] = 0x55;
    CHECK_THROWS_AS(decode_message(bad_type), BadType);

    std::vector<std::uint8_t> truncated(good.begin(), good.end() - 2);
    CHECK_THROWS_AS(decode_message(truncated), TruncatedFrame);

    std::vector<std::uint8_t> trailing = good;
    trailing.push_back(0);
    CHECK_THROWS_AS(decode_message(trailing), LengthMismatch);
}

TEST_CASE("in-process channel carries messages") {
    auto [a, b] = make_in_process_pair();
    HandshakeMessage m{MsgType::Params, 2, demo::params().set_a, demo::params().set_b};
    send_message(*a, m);
    CHECK(recv_message(*b) == m);
}

TEST_CASE("closing mid-frame raises TruncatedFrame") {
    auto [a, b] = make_in_process_pair();
    std::vector<std::uint8_t> partial{'A', 'E', 'R', '1', 0x01};
    a->send(partial.data(), partial.size());
    a.reset(); // closes the pipe
    CHECK_THROWS_AS(recv_message(*b), TruncatedFrame);
}

TEST_CASE("handshake over in-process duplex reproduces the worked example key") {
    auto [alice_end, bob_end] = make_in_process_pair();
    HandshakeOutcome out = run_handshake_over_channel(demo::params(), demo::word_alice(),
                                                      demo::word_bob(), *alice_end, *bob_end);
    CHECK(out.key_alice == demo::expected_key());
    CHECK(out.key_bob == demo::expected_key());
}

TEST_CASE("handshake with key reveal enabled") {
    auto [alice_end, bob_end] = make_in_process_pair();
    HandshakeOutcome out = run_handshake_over_channel(demo::params(), demo::word_alice(),
                                                      demo::word_bob(), *alice_end, *bob_end,
                                                      /*reveal=*/true);
    CHECK(out.key_alice == out.key_bob);
}

TEST_CASE("handshake over tcp loopback matches") {
    TcpListener listener(0);
    auto client = tcp_connect(listener.bound_port());
    auto server = listener.accept();
    HandshakeOutcome out = run_handshake_over_channel(demo::params(), demo::word_alice(),
                                                      demo::word_bob(), *client, *server);
    CHECK(out.key_alice == demo::expected_key());
    CHECK(out.key_bob == demo::expected_key());
}

TEST_CASE("commit arrival order does not matter") {
    PartyState alice = make_party(Role::Alice, demo::params(), demo::word_alice());
    PartyState bob = make_party(Role::Bob, demo::params(), demo::word_bob());
    HandshakeMessage commit_a{MsgType::CommitAlice, 2, commit(alice), {}};
    HandshakeMessage commit_b{MsgType::CommitBob, 2, commit(bob), {}};

    for (bool alice_first : {true, false}) {
        auto [a_end, b_end] = make_in_process_pair();
        if (alice_first) {
            send_message(*a_end, commit_a);
            send_message(*b_end, commit_b);
        } else {
            send_message(*b_end, commit_b);
            send_message(*a_end, commit_a);
        }
        HandshakeMessage to_bob = recv_message(*b_end);
        HandshakeMessage to_alice = recv_message(*a_end);
        CHECK(derive_key(alice, to_alice.matrices) == demo::expected_key());
        CHECK(derive_key(bob, to_bob.matrices) == demo::expected_key());
    }
}
