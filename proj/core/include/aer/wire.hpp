#ifndef AER_WIRE_HPP
#define AER_WIRE_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "aer/matrix.hpp"
#include "aer/protocol.hpp"

namespace aer::wire {

enum class MsgType : std::uint8_t {
    Params = 0x01,
    CommitAlice = 0x02,
    CommitBob = 0x03,
    KeyReveal = 0x7F, // test mode only: leaks the derived key in clear
};

// Frame: "AER1" | version 0x01 | msg_type | dim | count (u16 BE) | payload.
// PARAMS carries two consecutive (count, payload) blocks, set A then set B.
struct HandshakeMessage {
    MsgType msg_type;
    int dim;
    std::vector<Matrix> matrices; // the single list, or set A for PARAMS
    std::vector<Matrix> set_b;    // PARAMS only

    bool operator==(const HandshakeMessage&) const = default;
};

inline constexpr std::uint8_t wire_version = 0x01;

// Row-major raw bytes, no header.
std::vector<std::uint8_t> encode_matrix(const Matrix& x);
Matrix decode_matrix(const std::vector<std::uint8_t>& bytes, int dim);

std::vector<std::uint8_t> encode_message(const HandshakeMessage& m);
HandshakeMessage decode_message(const std::vector<std::uint8_t>& bytes);

// Reliable in-order duplex byte stream endpoint.
class ByteChannel {
public:
    virtual ~ByteChannel() = default;
    virtual void send(const std::uint8_t* data, std::size_t len) = 0;
    // Blocks until len bytes arrive; throws TruncatedFrame if the peer
    // closes first.
    virtual void recv_exact(std::uint8_t* data, std::size_t len) = 0;
};

void send_message(ByteChannel& ch, const HandshakeMessage& m);
HandshakeMessage recv_message(ByteChannel& ch);

// Two connected in-process endpoints backed by byte queues.
std::pair<std::unique_ptr<ByteChannel>, std::unique_ptr<ByteChannel>> make_in_process_pair();

// TCP loopback. The listener binds 127.0.0.1:port (port 0 picks a free one,
// readable via bound_port) and accept() yields the server endpoint.
class TcpListener {
public:
    explicit TcpListener(std::uint16_t port);
    ~TcpListener();
    std::uint16_t bound_port() const { return port_; }
    std::unique_ptr<ByteChannel> accept();

private:
    int fd_;
    std::uint16_t port_;
};

std::unique_ptr<ByteChannel> tcp_connect(std::uint16_t port);

struct HandshakeOutcome {
    Matrix key_alice;
    Matrix key_bob;
};

// Runs both roles over the two endpoints of one duplex channel. Each party
// sends its commit before reading the peer's, so either arrival order works.
// With reveal = true the parties additionally exchange KEY_REVEAL frames and
// check they match (test mode; the key travels in clear).
HandshakeOutcome run_handshake_over_channel(const PublicParams& params, const GeneratorWord& word_a,
                                            const GeneratorWord& word_b, ByteChannel& alice_end,
                                            ByteChannel& bob_end, bool reveal = false);

} // namespace aer::wire

#endif
