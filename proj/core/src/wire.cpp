#include "aer/wire.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <condition_variable>
#include <cstring>
#include <deque>
#include <future>
#include <mutex>

namespace aer::wire {

std::vector<std::uint8_t> encode_matrix(const Matrix& x) {
    return std::vector<std::uint8_t>(x.entries().begin(), x.entries().end());
}

Matrix decode_matrix(const std::vector<std::uint8_t>& bytes, int dim) {
    if (dim < 1) throw BadDimension(dim);
    if (bytes.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
        throw LengthMismatch(std::to_string(bytes.size()) + " bytes for dim " + std::to_string(dim));
    return Matrix(dim, bytes);
}

namespace {

constexpr char magic[4] = {'A', 'E', 'R', '1'};

bool known_type(std::uint8_t t) {
    switch (static_cast<MsgType>(t)) {
        case MsgType::Params:
        case MsgType::CommitAlice:
        case MsgType::CommitBob:
        case MsgType::KeyReveal:
            return true;
    }
    return false;
}

void put_u16_be(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void put_block(std::vector<std::uint8_t>& out, const std::vector<Matrix>& ms, int dim) {
    put_u16_be(out, static_cast<std::uint16_t>(ms.size()));
    for (const Matrix& m : ms) {
        if (m.dim() != dim) throw DimensionMismatch(dim, m.dim());
        out.insert(out.end(), m.entries().begin(), m.entries().end());
    }
}

struct Reader {
    const std::vector<std::uint8_t>& buf;
    std::size_t pos = 0;

    std::uint8_t u8() {
        if (pos >= buf.size()) throw TruncatedFrame{};
        return buf[pos++];
    }
    std::uint16_t u16_be() {
        std::uint16_t hi = u8();
        return static_cast<std::uint16_t>((hi << 8) | u8());
    }
    std::vector<Matrix> block(int dim) {
        std::uint16_t count = u16_be();
        std::vector<Matrix> ms;
        ms.reserve(count);
        std::size_t mat_bytes = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
        for (std::uint16_t i = 0; i < count; ++i) {
            if (pos + mat_bytes > buf.size()) throw TruncatedFrame{};
            ms.emplace_back(dim, std::vector<std::uint8_t>(buf.begin() + static_cast<std::ptrdiff_t>(pos),
                                                           buf.begin() + static_cast<std::ptrdiff_t>(pos + mat_bytes)));
            pos += mat_bytes;
        }
        return ms;
    }
};

} // namespace

std::vector<std::uint8_t> encode_message(const HandshakeMessage& m) {
    if (m.dim < 1 || m.dim > 255) throw BadDimension(m.dim);
    std::vector<std::uint8_t> out;
    out.insert(out.end(), magic, magic + 4);
    out.push_back(wire_version);
    out.push_back(static_cast<std::uint8_t>(m.msg_type));
    out.push_back(static_cast<std::uint8_t>(m.dim));
    put_block(out, m.matrices, m.dim);
    if (m.msg_type == MsgType::Params) put_block(out, m.set_b, m.dim);
    return out;
}

HandshakeMessage decode_message(const std::vector<std::uint8_t>& bytes) {
    Reader r{bytes};
    if (bytes.size() < 4) throw TruncatedFrame{};
    if (std::memcmp(bytes.data(), magic, 4) != 0) throw BadMagic{};
    r.pos = 4;
    std::uint8_t version = r.u8();
    if (version != wire_version) throw BadVersion(version);
    std::uint8_t type = r.u8();
    if (!known_type(type)) throw BadType(type);
    int dim = r.u8();
    if (dim < 1) throw BadDimension(dim);
    HandshakeMessage m{static_cast<MsgType>(type), dim, r.block(dim), {}};
    if (m.msg_type == MsgType::Params) m.set_b = r.block(dim);
    if (r.pos != bytes.size()) throw LengthMismatch("trailing bytes after frame");
    return m;
}

void send_message(ByteChannel& ch, const HandshakeMessage& m) {
    std::vector<std::uint8_t> frame = encode_message(m);
    ch.send(frame.data(), frame.size());
}

HandshakeMessage recv_message(ByteChannel& ch) {
    // header: magic(4) version(1) type(1) dim(1) count(2)
    std::uint8_t head[9];
    ch.recv_exact(head, sizeof head);
    if (std::memcmp(head, magic, 4) != 0) throw BadMagic{};
    if (head[4] != wire_version) throw BadVersion(head[4]);
    if (!known_type(head[5])) throw BadType(head[5]);
    int dim = head[6];
    if (dim < 1) throw BadDimension(dim);
    std::size_t mat_bytes = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
    std::uint16_t count = static_cast<std::uint16_t>((head[7] << 8) | head[8]);

    std::vector<std::uint8_t> frame(head, head + sizeof head);
    std::size_t payload = static_cast<std::size_t>(count) * mat_bytes;
    frame.resize(frame.size() + payload);
    ch.recv_exact(frame.data() + sizeof head, payload);
    if (static_cast<MsgType>(head[5]) == MsgType::Params) {
        std::uint8_t cnt2[2];
        ch.recv_exact(cnt2, 2);
        std::uint16_t count_b = static_cast<std::uint16_t>((cnt2[0] << 8) | cnt2[1]);
        std::size_t payload_b = static_cast<std::size_t>(count_b) * mat_bytes;
        std::size_t at = frame.size();
        frame.insert(frame.end(), cnt2, cnt2 + 2);
        frame.resize(frame.size() + payload_b);
        ch.recv_exact(frame.data() + at + 2, payload_b);
    }
    return decode_message(frame);
}

namespace {

// One direction of the in-process pipe.
struct Pipe {
    std::mutex mu;
    std::condition_variable cv;
    std::deque<std::uint8_t> data;
    bool closed = false;

    void write(const std::uint8_t* p, std::size_t len) {
        std::lock_guard lock(mu);
        data.insert(data.end(), p, p + len);
        cv.notify_all();
    }
    void read_exact(std::uint8_t* p, std::size_t len) {
        std::unique_lock lock(mu);
        for (std::size_t got = 0; got < len;) {
            cv.wait(lock, [&] { return !data.empty() || closed; });
            if (data.empty() && closed) throw TruncatedFrame{};
            while (got < len && !data.empty()) {
                p[got++] = data.front();
                data.pop_front();
            }
        }
    }
    void close() {
        std::lock_guard lock(mu);
        closed = true;
        cv.notify_all();
    }
};

class InProcessEnd final : public ByteChannel {
public:
    InProcessEnd(std::shared_ptr<Pipe> out, std::shared_ptr<Pipe> in)
        : out_(std::move(out)), in_(std::move(in)) {}
    ~InProcessEnd() override { out_->close(); }

    void send(const std::uint8_t* data, std::size_t len) override { out_->write(data, len); }
    void recv_exact(std::uint8_t* data, std::size_t len) override { in_->read_exact(data, len); }

private:
    std::shared_ptr<Pipe> out_;
    std::shared_ptr<Pipe> in_;
};

class TcpChannel final : public ByteChannel {
public:
    explicit TcpChannel(int fd) : fd_(fd) {}
    ~TcpChannel() override {
        if (fd_ >= 0) ::close(fd_);
    }

    void send(const std::uint8_t* data, std::size_t len) override {
        while (len > 0) {
            ssize_t n = ::send(fd_, data, len, MSG_NOSIGNAL);
            if (n <= 0) throw Error("tcp send failed");
            data += n;
            len -= static_cast<std::size_t>(n);
        }
    }
    void recv_exact(std::uint8_t* data, std::size_t len) override {
        while (len > 0) {
            ssize_t n = ::recv(fd_, data, len, 0);
            if (n == 0) throw TruncatedFrame{};
            if (n < 0) throw Error("tcp recv failed");
            data += n;
            len -= static_cast<std::size_t>(n);
        }
    }

private:
    int fd_;
};

} // namespace

std::pair<std::unique_ptr<ByteChannel>, std::unique_ptr<ByteChannel>> make_in_process_pair() {
    auto ab = std::make_shared<Pipe>();
    auto ba = std::make_shared<Pipe>();
    return {std::make_unique<InProcessEnd>(ab, ba), std::make_unique<InProcessEnd>(ba, ab)};
}

TcpListener::TcpListener(std::uint16_t port) {
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0) throw Error("socket() failed");
    int yes = 1;
    ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(port);
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
        ::close(fd_);
        throw Error("bind() failed");
    }
    if (::listen(fd_, 1) != 0) {
        ::close(fd_);
        throw Error("listen() failed");
    }
    socklen_t len = sizeof addr;
    ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() {
    if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<ByteChannel> TcpListener::accept() {
    int fd = ::accept(fd_, nullptr, nullptr);
    if (fd < 0) throw Error("accept() failed");
    int yes = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &yes, sizeof yes);
    return std::make_unique<TcpChannel>(fd);
}

std::unique_ptr<ByteChannel> tcp_connect(std::uint16_t port) {
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw Error("socket() failed");
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(port);
    if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
        ::close(fd);
        throw Error("connect() failed");
    }
    int yes = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &yes, sizeof yes);
    return std::make_unique<TcpChannel>(fd);
}

namespace {

Matrix run_party(Role role, const PublicParams& params, const GeneratorWord& word, ByteChannel& ch,
                 bool reveal) {
    PartyState state = make_party(role, params, word);
    MsgType own_type = role == Role::Alice ? MsgType::CommitAlice : MsgType::CommitBob;
    MsgType peer_type = role == Role::Alice ? MsgType::CommitBob : MsgType::CommitAlice;

    send_message(ch, HandshakeMessage{own_type, params.dim, commit(state), {}});
    HandshakeMessage peer = recv_message(ch);
    if (peer.msg_type != peer_type) throw BadType(static_cast<int>(peer.msg_type));
    Matrix key = derive_key(state, peer.matrices);

    if (reveal) {
        send_message(ch, HandshakeMessage{MsgType::KeyReveal, params.dim, {key}, {}});
        HandshakeMessage peer_key = recv_message(ch);
        if (peer_key.msg_type != MsgType::KeyReveal)
            throw BadType(static_cast<int>(peer_key.msg_type));
        if (peer_key.matrices.size() != 1 || !(peer_key.matrices[0] == key))
            throw Error("KEY_REVEAL mismatch between parties");
    }
    return key;
}

} // namespace

HandshakeOutcome run_handshake_over_channel(const PublicParams& params, const GeneratorWord& word_a,
                                            const GeneratorWord& word_b, ByteChannel& alice_end,
                                            ByteChannel& bob_end, bool reveal) {
    auto bob_key = std::async(std::launch::async, [&] {
        return run_party(Role::Bob, params, word_b, bob_end, reveal);
    });
    Matrix key_alice = run_party(Role::Alice, params, word_a, alice_end, reveal);
    return HandshakeOutcome{std::move(key_alice), bob_key.get()};
}

} // namespace aer::wire
