#include "aer/demo_vectors.hpp"

namespace aer::demo {
namespace {

Matrix m2(int a, int b, int c, int d) {
    return Matrix(2, {static_cast<gf256::Elem>(a), static_cast<gf256::Elem>(b),
                      static_cast<gf256::Elem>(c), static_cast<gf256::Elem>(d)});
}

} // namespace

const PublicParams& params() {
    static const PublicParams p{
        2,
        {m2(234, 67, 219, 0), m2(162, 202, 121, 143), m2(67, 137, 220, 106), m2(199, 110, 183, 92),
         m2(237, 239, 211, 252)},
        {m2(88, 183, 153, 25), m2(8, 73, 160, 26), m2(142, 10, 22, 153), m2(202, 231, 110, 0),
         m2(47, 118, 238, 49)},
    };
    return p;
}

const GeneratorWord& word_alice() {
    static const GeneratorWord w{{1, 1}, {3, 2}, {5, -1}};
    return w;
}

const GeneratorWord& word_bob() {
    static const GeneratorWord w{{1, 3}, {2, -2}, {4, 1}};
    return w;
}

const Transcript& expected_transcript() {
    static const Transcript t{
        {"x1", {m2(234, 67, 219, 0)}},
        {"x2", {m2(157, 61, 184, 176)}},
        {"x3", {m2(139, 111, 158, 137)}},
        {"x", {m2(244, 199, 161, 106)}},
        {"invx", {m2(207, 42, 35, 163)}},
        {"APrime",
         {m2(96, 46, 247, 33), m2(201, 184, 199, 219), m2(181, 239, 202, 162), m2(157, 134, 43, 87),
          m2(57, 198, 39, 39)}},
        {"y1", {m2(105, 152, 218, 62)}},
        {"y2", {m2(96, 185, 146, 230)}},
        {"y3", {m2(202, 231, 110, 0)}},
        {"y", {m2(54, 252, 233, 201)}},
        {"iny", {m2(167, 247, 222, 209)}},
        {"BPrime",
         {m2(155, 88, 93, 113), m2(67, 219, 82, 110), m2(70, 38, 195, 111), m2(45, 184, 255, 182),
          m2(199, 175, 205, 214)}},
        {"xprime1", {m2(155, 88, 93, 113)}},
        {"xprime2", {m2(16, 161, 146, 61)}},
        {"xprime3", {m2(58, 176, 107, 56)}},
        {"xprime", {m2(138, 127, 241, 20)}},
        {"KEYalice", {m2(136, 128, 80, 156)}},
        {"yprime1", {m2(64, 66, 133, 23)}},
        {"yprime2", {m2(226, 245, 221, 100)}},
        {"yprime3", {m2(157, 134, 43, 87)}},
        {"yprime", {m2(70, 1, 182, 185)}},
        {"invKey", {m2(156, 128, 80, 136)}},
        {"KEYbob", {m2(136, 128, 80, 156)}},
    };
    return t;
}

const Matrix& expected_key() {
    static const Matrix k = m2(136, 128, 80, 156);
    return k;
}

} // namespace aer::demo
